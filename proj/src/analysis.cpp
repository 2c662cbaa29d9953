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

#include "icx/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <type_traits>

#include "icx/core_table.hpp"
#include "icx/defect_lab.hpp"
#include "icx/errors.hpp"
#include "icx/parallel.hpp"

namespace icx {
namespace {

void require_table(const ComplexityTable& table, std::uint64_t limit,
                   const char* what) {
  if (limit > table.limit()) {
    throw Error(ErrorKind::kOutOfRange,
                std::string(what) + " up to " + std::to_string(limit) +
                    " exceeds the table limit " + std::to_string(table.limit()));
  }
}

void require_grid(const ComplexityTable& table,
                  const std::vector<std::uint64_t>& grid, const char* what) {
  if (grid.empty()) {
    throw Error(ErrorKind::kInvalidArgument, std::string(what) + " needs a grid");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] == 0 || (i > 0 && grid[i] <= grid[i - 1])) {
      throw Error(ErrorKind::kInvalidArgument,
                  std::string(what) + " grid must be positive and strictly increasing");
    }
  }
  require_table(table, grid.back(), what);
}

// Counts n in each (grid[i-1], grid[i]] satisfying pred, accumulated.
template <typename Pred>
std::vector<std::uint64_t> cumulative_counts(const std::vector<std::uint64_t>& grid,
                                             Pred pred) {
  std::vector<std::uint64_t> counts;
  std::uint64_t running = 0;
  std::uint64_t prev = 0;
  for (std::uint64_t top : grid) {
    running += parallel_reduce(
        prev + 1, top, std::uint64_t{0},
        [&](std::uint64_t a, std::uint64_t z) {
          std::uint64_t c = 0;
          for (std::uint64_t n = a; n <= z; ++n) c += pred(n) ? 1 : 0;
          return c;
        },
        [](std::uint64_t x, std::uint64_t y) { return x + y; });
    counts.push_back(running);
    prev = top;
  }
  return counts;
}

template <typename T>
T ratio(std::size_t i, std::size_t k) {
  if constexpr (std::is_same_v<T, double>) {
    return static_cast<double>(i) / static_cast<double>(k);
  } else {
    mpq_class q(static_cast<unsigned long>(i), static_cast<unsigned long>(k));
    q.canonicalize();
    return q;
  }
}

template <typename T>
std::vector<T> sorted_points(const std::vector<T>& points) {
  if (points.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "discrepancy of an empty point set");
  }
  std::vector<T> x = points;
  std::sort(x.begin(), x.end());
  return x;
}

template <typename T>
T star_impl(const std::vector<T>& points) {
  const std::vector<T> x = sorted_points(points);
  const std::size_t k = x.size();
  T best = 0;
  for (std::size_t i = 1; i <= k; ++i) {
    const T above = ratio<T>(i, k) - x[i - 1];
    const T below = x[i - 1] - ratio<T>(i - 1, k);
    if (above > best) best = above;
    if (below > best) best = below;
  }
  return best;
}

template <typename T>
T extreme_impl(const std::vector<T>& points) {
  const std::vector<T> x = sorted_points(points);
  const std::size_t k = x.size();
  T hi = ratio<T>(1, k) - x[0];
  T lo = hi;
  for (std::size_t i = 2; i <= k; ++i) {
    const T v = ratio<T>(i, k) - x[i - 1];
    if (v > hi) hi = v;
    if (v < lo) lo = v;
  }
  return ratio<T>(1, k) + hi - lo;
}

// Smallest-index-wins argmax of ||n||/log n.
struct RatioBest {
  std::uint64_t n = 0;
  long double value = -1;
};

}  // namespace

PointSet s_j_points(const mpz_class& n, std::uint64_t m, std::uint64_t j,
                    std::uint64_t big_k) {
  if (big_k < 1 || m < 2) {
    throw Error(ErrorKind::kInvalidArgument, "S_j needs K >= 1 and m >= 2");
  }
  if (sgn(n) < 0) throw Error(ErrorKind::kInvalidArgument, "S_j needs n >= 0");
  PointSet out;
  out.n = n;
  out.m = m;
  out.j = j;
  out.big_k = big_k;
  mpz_class modulus;
  mpz_ui_pow_ui(modulus.get_mpz_t(), m, j);
  mpz_class quotient, digits;
  for (std::uint64_t k = big_k; k < 2 * big_k; ++k) {
    const mpz_class kk = static_cast<unsigned long>(k);
    mpz_fdiv_q(quotient.get_mpz_t(), n.get_mpz_t(), kk.get_mpz_t());
    mpz_fdiv_r(digits.get_mpz_t(), quotient.get_mpz_t(), modulus.get_mpz_t());
    mpq_class point(digits, modulus);
    point.canonicalize();
    out.points.push_back(std::move(point));
  }
  return out;
}

double star_discrepancy(const std::vector<double>& points) { return star_impl(points); }
mpq_class star_discrepancy(const std::vector<mpq_class>& points) {
  return star_impl(points);
}
double extreme_discrepancy(const std::vector<double>& points) {
  return extreme_impl(points);
}
mpq_class extreme_discrepancy(const std::vector<mpq_class>& points) {
  return extreme_impl(points);
}

std::vector<double> to_doubles(const std::vector<mpq_class>& points) {
  std::vector<double> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.get_d());
  return out;
}

RatioPoint ratio_scan(const ComplexityTable& table, std::uint64_t limit) {
  if (limit < 2) throw Error(ErrorKind::kInvalidArgument, "ratio scan needs N >= 2");
  require_table(table, limit, "ratio scan");
  const RatioBest best = parallel_reduce(
      2, limit, RatioBest{},
      [&](std::uint64_t a, std::uint64_t z) {
        RatioBest b;
        for (std::uint64_t n = a; n <= z; ++n) {
          const long double v = table[n] / std::log(static_cast<long double>(n));
          if (v > b.value) b = {n, v};
        }
        return b;
      },
      [](RatioBest x, RatioBest y) { return y.value > x.value ? y : x; });
  return {best.n, table[best.n], static_cast<double>(best.value)};
}

double DensityScan::fraction(std::size_t i) const {
  return static_cast<double>(counts.at(i)) / static_cast<double>(grid.at(i));
}

DensityScan density_scan(const ComplexityTable& table, double t,
                         const std::vector<std::uint64_t>& grid) {
  require_grid(table, grid, "density scan");
  if (!std::isfinite(t)) throw Error(ErrorKind::kInvalidArgument, "t must be finite");
  DensityScan out;
  out.t = t;
  out.grid = grid;
  const long double log3 = std::log(3.0L);
  out.counts = cumulative_counts(grid, [&](std::uint64_t n) {
    const int cost = table[n];
    if (n == 1) return cost <= 0;
    if (is_power_of_three(n)) {
      return cost <= static_cast<long double>(t) * interval_index(n);
    }
    const long double gap =
        static_cast<long double>(t) * std::log(static_cast<long double>(n)) / log3 - cost;
    if (std::fabs(gap) < kBoundaryTolerance) {
      throw Error(ErrorKind::kBoundaryAmbiguity,
                  "||" + std::to_string(n) + "|| is within tolerance of t log3 n");
    }
    return gap >= 0;
  });
  return out;
}

GrowthScan defect_growth(const ComplexityTable& table, double r,
                         const std::vector<std::uint64_t>& grid) {
  if (!(r > 0) || !std::isfinite(r)) {
    throw Error(ErrorKind::kInvalidArgument, "defect growth needs r > 0");
  }
  require_grid(table, grid, "defect growth");
  GrowthScan out;
  out.r = r;
  out.grid = grid;
  out.counts = cumulative_counts(grid, [&](std::uint64_t n) {
    const long double d = defect(table, n);
    if (!is_power_of_three(n) &&
        std::fabs(d - static_cast<long double>(r)) < kBoundaryTolerance) {
      throw Error(ErrorKind::kBoundaryAmbiguity,
                  "def(" + std::to_string(n) + ") is within tolerance of r");
    }
    return d < r;
  });

  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 3 || out.counts[i] == 0) continue;
    xs.push_back(std::log(std::log(static_cast<double>(grid[i]))));
    ys.push_back(std::log(static_cast<double>(out.counts[i])));
  }
  out.fitted_exponent = std::numeric_limits<double>::quiet_NaN();
  if (xs.size() >= 2) {
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      mx += xs[i];
      my += ys[i];
    }
    mx /= xs.size();
    my /= ys.size();
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
      sxy += (xs[i] - mx) * (ys[i] - my);
      sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    if (sxx > 0) out.fitted_exponent = sxy / sxx;
  }
  return out;
}

ConjectureReport conjecture_scan(const ComplexityTable& table, std::uint64_t limit) {
  require_table(table, limit, "conjecture scan");
  ConjectureReport out;
  out.limit = limit;
  std::uint64_t p5 = 1;
  for (int c = 0; c < 6 && p5 <= limit; ++c, p5 *= 5) {
    std::uint64_t p35 = p5;
    for (int b = 0; p35 <= limit; ++b, p35 *= 3) {
      std::uint64_t n = p35;
      for (int a = 0; n <= limit; ++a, n *= 2) {
        if (a + b + c == 0) continue;
        ++out.candidates;
        const int cost = table[n];
        if (cost != 2 * a + 3 * b + 5 * c) out.violations.push_back({a, b, c, n, cost});
      }
    }
  }
  std::sort(out.violations.begin(), out.violations.end(),
            [](const auto& x, const auto& y) { return x.n < y.n; });
  return out;
}

}  // namespace icx
