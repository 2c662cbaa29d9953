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

#include "icx/synthesizer.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "icx/core_table.hpp"
#include "icx/digit_bounds.hpp"
#include "icx/errors.hpp"

namespace icx {

double lambert_w(double x) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw Error(ErrorKind::kInvalidArgument,
                "lambert_w needs a finite x >= 0");
  }
  if (x == 0.0) return 0.0;

  double w;
  if (x < 2.0) {
    w = std::log1p(x) * (1.0 - std::log1p(std::log1p(x)) / (2.0 + std::log1p(x)));
  } else {
    const double l = std::log(x);
    w = l - std::log(l) + std::log(l) / l;
  }
  for (int iter = 0; iter < 64; ++iter) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::fabs(step) <= 1e-16 * (1.0 + std::fabs(w))) break;
  }
  return w;
}

double log_big(const mpz_class& n) {
  if (sgn(n) <= 0) {
    throw Error(ErrorKind::kInvalidArgument, "log of a non-positive integer");
  }
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, n.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

ParamChoice asymptotic_params(const mpz_class& n) {
  if (n < 3) {
    throw Error(ErrorKind::kInvalidArgument, "parameter choice needs n >= 3");
  }
  ParamChoice out;
  out.n = n;
  out.log_n = log_big(n);
  const double p = std::floor(out.log_n / std::log(out.log_n));
  out.p = static_cast<std::uint64_t>(std::max(1.0, p));
  const double w = lambert_w(3.0 * std::ldexp(1.0, -18) * out.log_n);
  out.k = static_cast<std::uint64_t>(
      std::floor(std::pow(out.log_n, 2.0 / 3.0) * std::cbrt(w)));
  return out;
}

std::vector<std::uint64_t> base_digits(const mpz_class& x, std::uint64_t base) {
  if (sgn(x) <= 0 || base < 2) {
    throw Error(ErrorKind::kInvalidArgument, "base_digits needs x > 0, base >= 2");
  }
  std::vector<std::uint64_t> digits;
  mpz_class rest = x;
  mpz_class digit;
  const mpz_class b = static_cast<unsigned long>(base);
  while (sgn(rest) > 0) {
    mpz_fdiv_qr(rest.get_mpz_t(), digit.get_mpz_t(), rest.get_mpz_t(), b.get_mpz_t());
    digits.push_back(digit.get_ui());
  }
  std::reverse(digits.begin(), digits.end());
  return digits;
}

namespace {

struct Split {
  mpz_class quotient;
  std::uint64_t remainder = 0;
};

Split split_by(const mpz_class& n, std::uint64_t k) {
  Split s;
  mpz_class r;
  const mpz_class kk = static_cast<unsigned long>(k);
  mpz_fdiv_qr(s.quotient.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), kk.get_mpz_t());
  s.remainder = r.get_ui();
  return s;
}

std::uint64_t digits_cost(const std::vector<std::uint64_t>& digits,
                          const DigitBoundTable& bounds,
                          const ComplexityTable& table) {
  std::uint64_t cost = table[digits.front()];
  for (std::size_t i = 1; i < digits.size(); ++i) cost += bounds.bound(digits[i]);
  return cost;
}

}  // namespace

std::optional<std::uint64_t> candidate_cost(const mpz_class& n, std::uint64_t k,
                                            const DigitBoundTable& bounds,
                                            const ComplexityTable& table) {
  if (k == 0) throw Error(ErrorKind::kInvalidArgument, "multiplier k must be >= 1");
  const Split s = split_by(n, k);
  if (sgn(s.quotient) == 0) return std::nullopt;
  std::uint64_t cost = digits_cost(base_digits(s.quotient, bounds.base()), bounds, table);
  if (k > 1) cost += table.query(k);
  if (s.remainder > 0) cost += table.query(s.remainder);
  return cost;
}

SynthesisResult synthesize(const mpz_class& n, std::uint64_t base, KRange k_range,
                           const DigitBoundTable& bounds,
                           const ComplexityTable& table) {
  if (n < 2) throw Error(ErrorKind::kInvalidArgument, "synthesis needs n >= 2");
  if (k_range.lo < 1 || k_range.lo >= k_range.hi) {
    throw Error(ErrorKind::kInvalidArgument,
                "empty multiplier range [" + std::to_string(k_range.lo) + ", " +
                    std::to_string(k_range.hi) + ")");
  }
  if (bounds.base() != base) {
    throw Error(ErrorKind::kInvalidArgument,
                "digit bounds are for base " + std::to_string(bounds.base()) +
                    ", requested base " + std::to_string(base));
  }
  if (k_range.hi - 1 > table.limit() || base > table.limit()) {
    throw Error(ErrorKind::kOutOfRange,
                "multiplier range and base need a complexity table up to " +
                    std::to_string(std::max(k_range.hi - 1, base)) + ", have " +
                    std::to_string(table.limit()));
  }

  std::optional<std::uint64_t> best_cost;
  std::uint64_t best_k = 0;
  for (std::uint64_t k = k_range.lo; k < k_range.hi; ++k) {
    const auto cost = candidate_cost(n, k, bounds, table);
    if (cost && (!best_cost || *cost < *best_cost)) {
      best_cost = cost;
      best_k = k;
    }
  }
  if (!best_cost) {
    throw Error(ErrorKind::kInvalidArgument,
                "every multiplier in the range exceeds n");
  }

  SynthesisResult out;
  out.n = n;
  out.base = base;
  out.k = best_k;
  const Split s = split_by(n, best_k);
  out.remainder = s.remainder;
  out.digits = base_digits(s.quotient, base);
  out.predicted_cost = *best_cost;

  std::vector<std::optional<DigitSchema>> schemas(base);
  Expression e = reconstruct(table, out.digits.front());
  for (std::size_t i = 1; i < out.digits.size(); ++i) {
    auto& schema = schemas[out.digits[i]];
    if (!schema) schema = bounds.witness(out.digits[i]);
    e = apply_schema(table, *schema, std::move(e));
  }
  if (best_k > 1) e = Expression::product(std::move(e), reconstruct(table, best_k));
  if (out.remainder > 0) {
    e = Expression::sum(std::move(e), reconstruct(table, out.remainder));
  }
  out.expression = std::move(e);
  return out;
}

std::uint64_t binary_expansion_ones(const mpz_class& n) {
  if (sgn(n) <= 0) {
    throw Error(ErrorKind::kInvalidArgument, "binary expansion needs n >= 1");
  }
  const std::size_t bits = mpz_sizeinbase(n.get_mpz_t(), 2);
  const std::uint64_t set_bits = mpz_popcount(n.get_mpz_t());
  return 1 + 2 * (bits - 1) + (set_bits - 1);
}

}  // namespace icx
