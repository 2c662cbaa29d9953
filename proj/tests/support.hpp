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

#ifndef ICX_TESTS_SUPPORT_HPP_
#define ICX_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <map>
#include <memory>

#include "icx/core_table.hpp"

namespace icx::testing {

// Tables are built once per limit and shared across test cases.
inline const ComplexityTable& table_to(std::uint64_t limit) {
  static std::map<std::uint64_t, std::unique_ptr<ComplexityTable>> cache;
  auto& slot = cache[limit];
  if (!slot) slot = std::make_unique<ComplexityTable>(ComplexityTable::build(limit));
  return *slot;
}

inline constexpr std::uint64_t kPow3_13 = 1594323;

}  // namespace icx::testing

#endif  // ICX_TESTS_SUPPORT_HPP_
