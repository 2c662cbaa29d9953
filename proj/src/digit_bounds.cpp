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

#include "icx/digit_bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "icx/core_table.hpp"
#include "icx/errors.hpp"

namespace icx {
namespace {

std::vector<std::uint64_t> divisors_of(std::uint64_t m) {
  std::vector<std::uint64_t> small, large;
  for (std::uint64_t d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    small.push_back(d);
    if (d != m / d) large.push_back(m / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

std::size_t index_of(const std::vector<std::uint64_t>& sorted, std::uint64_t d) {
  return static_cast<std::size_t>(
      std::lower_bound(sorted.begin(), sorted.end(), d) - sorted.begin());
}

}  // namespace

std::uint32_t DigitBoundTable::bound(std::uint64_t r) const {
  if (r >= base_) {
    throw Error(ErrorKind::kOutOfRange,
                "remainder " + std::to_string(r) + " not below base " +
                    std::to_string(base_));
  }
  return bounds_[r];
}

double DigitBoundTable::averaged_constant() const noexcept {
  const double m = static_cast<double>(base_);
  return static_cast<double>(bound_sum_) / (m * std::log(m));
}

DigitSchema DigitBoundTable::witness(std::uint64_t r) const {
  bound(r);  // range check
  DigitSchema chain;
  append_chain(divisors_.size() - 1, r, chain);
  return chain;
}

void DigitBoundTable::append_chain(std::size_t divisor_index, std::uint64_t r,
                                   DigitSchema& out) const {
  const std::uint64_t d = divisors_[divisor_index];
  const std::size_t outer = split_[divisor_index][r];
  if (outer == 0) {
    out.push_back({d, r});
    return;
  }
  const std::uint64_t b1 = divisors_[outer];
  append_chain(outer, r % b1, out);
  append_chain(index_of(divisors_, d / b1), r / b1, out);
}

std::uint64_t certify_memory_estimate(std::uint64_t m) {
  std::uint64_t total = 0;
  for (std::uint64_t d : divisors_of(m)) {
    total += d * (sizeof(std::uint32_t) + sizeof(std::uint16_t));
  }
  return total;
}

DigitBoundTable certify_base(const ComplexityTable& table, std::uint64_t m,
                             const CertifyOptions& options) {
  if (m < 2) {
    throw Error(ErrorKind::kInvalidArgument, "digit base must be >= 2");
  }
  if (table.limit() < m) {
    throw Error(ErrorKind::kOutOfRange,
                "certifying base " + std::to_string(m) +
                    " needs a complexity table up to " + std::to_string(m) +
                    ", have " + std::to_string(table.limit()));
  }
  const std::uint64_t estimate = certify_memory_estimate(m);
  if (estimate > options.huge_threshold_bytes && !options.allow_huge) {
    throw Error(ErrorKind::kResourceLimit,
                "base " + std::to_string(m) + " needs about " +
                    std::to_string(estimate) +
                    " bytes of divisor tables; pass the huge-base option");
  }

  DigitBoundTable out;
  out.base_ = m;
  out.divisors_ = divisors_of(m);
  const auto& divs = out.divisors_;
  if (divs.size() > std::numeric_limits<std::uint16_t>::max()) {
    throw Error(ErrorKind::kResourceLimit, "base has too many divisors");
  }
  out.cost_.resize(divs.size());
  out.split_.resize(divs.size());

  for (std::size_t i = 1; i < divs.size(); ++i) {
    const std::uint64_t d = divs[i];
    // (b1, b2) index pairs with b1*b2 = d, 1 < b1 < d.
    std::vector<std::pair<std::size_t, std::size_t>> factorizations;
    for (std::size_t j = 1; j < i; ++j) {
      if (d % divs[j] == 0) factorizations.emplace_back(j, index_of(divs, d / divs[j]));
    }
    auto& cost = out.cost_[i];
    auto& split = out.split_[i];
    cost.resize(d);
    split.assign(d, 0);
    const std::uint32_t times_d = static_cast<std::uint32_t>(table[d]);
    for (std::uint64_t r = 0; r < d; ++r) {
      std::uint32_t best = times_d + (r > 0 ? table[r] : 0);
      for (auto [j, inner] : factorizations) {
        const std::uint64_t b1 = divs[j];
        const std::uint32_t v = out.cost_[j][r % b1] + out.cost_[inner][r / b1];
        if (v < best) {
          best = v;
          split[r] = static_cast<std::uint16_t>(j);
        }
      }
      cost[r] = best;
    }
  }

  out.bounds_ = out.cost_.back();
  for (std::uint32_t b : out.bounds_) out.bound_sum_ += b;
  return out;
}

double averaged_constant(const ComplexityTable& table, std::uint64_t m) {
  return certify_base(table, m).averaged_constant();
}

std::uint64_t schema_cost(const ComplexityTable& table, const DigitSchema& schema) {
  std::uint64_t total = 0;
  for (const DigitStep& step : schema) {
    total += table.query(step.base);
    if (step.remainder > 0) total += table.query(step.remainder);
  }
  return total;
}

Expression apply_schema(const ComplexityTable& table, const DigitSchema& schema,
                        Expression e) {
  for (auto it = schema.rbegin(); it != schema.rend(); ++it) {
    e = Expression::product(std::move(e), reconstruct(table, it->base));
    if (it->remainder > 0) {
      e = Expression::sum(std::move(e), reconstruct(table, it->remainder));
    }
  }
  return e;
}

std::string format_schema(const DigitSchema& schema) {
  std::string out;
  for (const DigitStep& step : schema) {
    if (!out.empty()) out += '|';
    out += std::to_string(step.base);
    out += ',';
    out += std::to_string(step.remainder);
  }
  return out;
}

int empirical_lower(const ComplexityTable& table, std::uint64_t m,
                    std::uint64_t r, std::uint64_t scan) {
  if (m < 2 || r >= m || scan == 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "empirical_lower needs m >= 2, r < m and a positive scan");
  }
  if (table.limit() < r || scan > (table.limit() - r) / m) {
    throw Error(ErrorKind::kOutOfRange,
                "scan of " + std::to_string(scan) + " for base " +
                    std::to_string(m) + " needs a table up to m*N+r; have " +
                    std::to_string(table.limit()));
  }
  int best = std::numeric_limits<int>::min();
  for (std::uint64_t n = 1; n <= scan; ++n) {
    best = std::max(best, table[m * n + r] - table[n]);
  }
  return best;
}

}  // namespace icx
