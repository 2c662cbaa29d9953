// Copyright 2026 The icx Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef ICX_ERRORS_HPP_
#define ICX_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace icx {

enum class ErrorKind {
  kInvalidArgument,
  kOutOfRange,
  kResourceLimit,
  kIo,
  kBadMagic,
  kVersionMismatch,
  kTruncated,
  kCorruptFile,
  kSyntax,
  kBoundaryAmbiguity,
};

// All library failures surface as icx::Error; kind() selects the category.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

// Parse failure; offset is the 0-based byte position of the offending input.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, const std::string& what)
      : Error(ErrorKind::kSyntax,
              what + " at offset " + std::to_string(offset)),
        offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace icx

#endif  // ICX_ERRORS_HPP_
