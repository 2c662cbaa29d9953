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

// Exact integer-complexity table: the least number of 1's needed to write n
// with + and * only, for every 1 <= n <= limit.

#ifndef ICX_CORE_TABLE_HPP_
#define ICX_CORE_TABLE_HPP_

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace icx {

struct BuildOptions {
  // Stop the additive scan once 3*log3(a*(n-a)) clears the current best.
  // Disabling it runs the full a <= n/2 scan (used to test prune soundness).
  bool additive_prune = true;
  // Tables larger than this many entries are refused.
  std::uint64_t max_entries = std::uint64_t{4} << 30;
};

// Immutable byte-per-entry map n -> ||n||; entry n-1 holds ||n||.
class ComplexityTable {
 public:
  // Format version written by save(); load() accepts only this version.
  static constexpr std::uint16_t kFormatVersion = 1;

  static ComplexityTable build(std::uint64_t limit,
                               const BuildOptions& options = {});
  static ComplexityTable load(const std::filesystem::path& path);

  void save(const std::filesystem::path& path) const;

  std::uint64_t limit() const noexcept { return costs_.size(); }

  // Checked lookup; throws kOutOfRange naming the limit.
  int query(std::uint64_t n) const;

  // Unchecked lookup for hot loops; 1 <= n <= limit().
  int operator[](std::uint64_t n) const noexcept { return costs_[n - 1]; }

  std::span<const std::uint8_t> costs() const noexcept { return costs_; }

  friend bool operator==(const ComplexityTable&,
                         const ComplexityTable&) = default;

 private:
  explicit ComplexityTable(std::vector<std::uint8_t> costs)
      : costs_(std::move(costs)) {}

  std::vector<std::uint8_t> costs_;
};

// Free-function spellings of the table operations.
inline ComplexityTable build_table(std::uint64_t limit,
                                   const BuildOptions& options = {}) {
  return ComplexityTable::build(limit, options);
}
inline int query(const ComplexityTable& table, std::uint64_t n) {
  return table.query(n);
}
inline void save_table(const ComplexityTable& table,
                       const std::filesystem::path& path) {
  table.save(path);
}
inline ComplexityTable load_table(const std::filesystem::path& path) {
  return ComplexityTable::load(path);
}

// Largest argument accepted by brute_oracle().
inline constexpr std::uint64_t kBruteOracleMax = 100000;

// Reference value of ||n|| by memoized full recursion over every additive
// and multiplicative split, with no pruning. Quadratic; correctness only.
int brute_oracle(std::uint64_t n);

// All of ||1..n|| from the same unpruned recursion.
std::vector<int> brute_oracle_range(std::uint64_t n);

// 3*log3(x) in extended precision; the universal lower bound on ||x||.
long double three_log3(long double x);

}  // namespace icx

#endif  // ICX_CORE_TABLE_HPP_
