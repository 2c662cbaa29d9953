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

// Certified upper bounds on the cost of appending a base-m digit.
//
// For 0 <= r < m, bound(m, r) is the number of extra 1's a schema needs to
// turn any expression E of n into an expression of m*n + r. Schemas are
// either trivial, E*m (+ r when r > 0), or composed from a factorization
// m = b1*b2 via the mixed-radix identity
//
//   m*n + r = b1*(b2*n + r/b1) + r%b1.
//
// Every composed schema flattens into a chain of trivial steps, so a witness
// is stored and exported as that chain, outermost step first.

#ifndef ICX_DIGIT_BOUNDS_HPP_
#define ICX_DIGIT_BOUNDS_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "icx/expression.hpp"

namespace icx {

class ComplexityTable;

// One trivial step: E -> E*base (+ remainder).
struct DigitStep {
  std::uint64_t base = 0;
  std::uint64_t remainder = 0;

  friend bool operator==(const DigitStep&, const DigitStep&) = default;
};

using DigitSchema = std::vector<DigitStep>;

struct CertifyOptions {
  // Bases whose divisor tables need more than this many bytes are refused
  // unless allow_huge is set.
  std::uint64_t huge_threshold_bytes = std::uint64_t{64} << 20;
  bool allow_huge = false;
};

class DigitBoundTable {
 public:
  std::uint64_t base() const noexcept { return base_; }
  std::span<const std::uint32_t> bounds() const noexcept { return bounds_; }
  std::uint32_t bound(std::uint64_t r) const;
  std::uint64_t bound_sum() const noexcept { return bound_sum_; }

  // (1/(m log m)) * sum_r bound(r).
  double averaged_constant() const noexcept;

  // Flattened witness chain for remainder r, outermost step first.
  DigitSchema witness(std::uint64_t r) const;

 private:
  friend DigitBoundTable certify_base(const ComplexityTable&, std::uint64_t,
                                      const CertifyOptions&);

  std::uint64_t base_ = 0;
  std::vector<std::uint32_t> bounds_;
  std::uint64_t bound_sum_ = 0;
  // Divisors of base_ (ascending) and, per divisor d and remainder r < d,
  // the index of the chosen outer factor b1 in divisors_ (0 = trivial).
  std::vector<std::uint64_t> divisors_;
  std::vector<std::vector<std::uint16_t>> split_;
  std::vector<std::vector<std::uint32_t>> cost_;

  void append_chain(std::size_t divisor_index, std::uint64_t r,
                    DigitSchema& out) const;
};

// Bytes certify_base would allocate for base m (reported before huge runs).
std::uint64_t certify_memory_estimate(std::uint64_t m);

// DP over ordered factorizations; needs table.limit() >= m.
DigitBoundTable certify_base(const ComplexityTable& table, std::uint64_t m,
                             const CertifyOptions& options = {});

double averaged_constant(const ComplexityTable& table, std::uint64_t m);

// Extra 1's a schema costs: sum of ||base|| + ||remainder|| (r > 0) per step.
std::uint64_t schema_cost(const ComplexityTable& table, const DigitSchema& schema);

// Applies the schema to an expression of n, giving one of m*n + r.
Expression apply_schema(const ComplexityTable& table, const DigitSchema& schema,
                        Expression e);

// "b1,r1|b2,r2|...": outermost step first.
std::string format_schema(const DigitSchema& schema);

// max over 1 <= n <= scan of ||m*n + r|| - ||n||.
int empirical_lower(const ComplexityTable& table, std::uint64_t m,
                    std::uint64_t r, std::uint64_t scan);

}  // namespace icx

#endif  // ICX_DIGIT_BOUNDS_HPP_
