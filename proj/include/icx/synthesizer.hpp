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

// Explicit 1-expressions for large n.
//
// For each candidate multiplier k, write n = k*n_k + r_k and expand n_k in
// base m most-significant digit first. The head digit costs its exact
// complexity; every lower digit d costs bound(m, d) via its certified schema.
// The multiplier costs ||k|| (nothing for k = 1) and the remainder ||r_k||
// (nothing for r_k = 0). The cheapest candidate is assembled.

#ifndef ICX_SYNTHESIZER_HPP_
#define ICX_SYNTHESIZER_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "icx/expression.hpp"

namespace icx {

class ComplexityTable;
class DigitBoundTable;

// Principal branch W0 for x >= 0, by Halley iteration.
double lambert_w(double x);

// Natural log of a positive big integer.
double log_big(const mpz_class& n);

// Asymptotic parameter choice for the digit-averaging construction:
//   p = floor(log n / log log n), clamped to >= 1,
//   K = floor((log n)^(2/3) * W(3 * 2^-18 * log n)^(1/3)).
// K is reported as computed; it is 0 for every n of practical size.
struct ParamChoice {
  mpz_class n;
  double log_n = 0;
  std::uint64_t p = 0;
  std::uint64_t k = 0;
};

ParamChoice asymptotic_params(const mpz_class& n);

// Half-open range of candidate multipliers [lo, hi).
struct KRange {
  std::uint64_t lo = 1;
  std::uint64_t hi = 64;
};

struct SynthesisResult {
  mpz_class n;
  std::uint64_t base = 0;
  std::uint64_t k = 0;
  std::uint64_t remainder = 0;
  // Base-m digits of n_k = (n - r_k) / k, most significant first.
  std::vector<std::uint64_t> digits;
  std::uint64_t predicted_cost = 0;
  Expression expression;
};

// Base-m digits of x > 0, most significant first.
std::vector<std::uint64_t> base_digits(const mpz_class& x, std::uint64_t base);

// Predicted 1-count for one multiplier, or nullopt when k > n.
std::optional<std::uint64_t> candidate_cost(const mpz_class& n, std::uint64_t k,
                                            const DigitBoundTable& bounds,
                                            const ComplexityTable& table);

SynthesisResult synthesize(const mpz_class& n, std::uint64_t base, KRange k_range,
                           const DigitBoundTable& bounds,
                           const ComplexityTable& table);

// 1-count of the plain binary Horner expression: 1 for the leading bit, then
// (1+1) per further bit plus 1 for each set bit.
std::uint64_t binary_expansion_ones(const mpz_class& n);

}  // namespace icx

#endif  // ICX_SYNTHESIZER_HPP_
