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

// Empirical probes: discrepancy of the point sets S_j, ratio extremes,
// density of small-ratio integers, small-defect growth and the
// ||2^a 3^b 5^c|| = 2a + 3b + 5c scan.

#ifndef ICX_ANALYSIS_HPP_
#define ICX_ANALYSIS_HPP_

#include <gmpxx.h>

#include <cstdint>
#include <vector>

namespace icx {

class ComplexityTable;

struct PointSet {
  // (n mod k stripped, divided by k) mod m^j, over m^j; one per k in [K, 2K).
  std::vector<mpq_class> points;
  mpz_class n;
  std::uint64_t m = 0;
  std::uint64_t j = 0;
  std::uint64_t big_k = 0;
};

// Exact integer arithmetic throughout. Needs K >= 1, m >= 2.
PointSet s_j_points(const mpz_class& n, std::uint64_t m, std::uint64_t j,
                    std::uint64_t big_k);

// max_i max(i/K - x_(i), x_(i) - (i-1)/K) over the sorted points.
double star_discrepancy(const std::vector<double>& points);
mpq_class star_discrepancy(const std::vector<mpq_class>& points);

// Sup over subintervals J of [0,1) of |#(points in J)/K - |J||, from the
// sorted points in linear time:
//   1/K + max_i (i/K - x_(i)) - min_i (i/K - x_(i)).
double extreme_discrepancy(const std::vector<double>& points);
mpq_class extreme_discrepancy(const std::vector<mpq_class>& points);

std::vector<double> to_doubles(const std::vector<mpq_class>& points);

struct RatioPoint {
  std::uint64_t n = 0;
  int cost = 0;
  double ratio = 0;  // ||n|| / log n
};

// argmax of ||n|| / log n over 2 <= n <= limit; smallest n wins ties.
RatioPoint ratio_scan(const ComplexityTable& table, std::uint64_t limit);

struct DensityScan {
  double t = 0;
  std::vector<std::uint64_t> grid;
  // counts[i] = |{n <= grid[i] : ||n|| <= t log3 n}|
  std::vector<std::uint64_t> counts;

  double fraction(std::size_t i) const;
};

// grid must be strictly increasing and within the table.
DensityScan density_scan(const ComplexityTable& table, double t,
                         const std::vector<std::uint64_t>& grid);

struct GrowthScan {
  double r = 0;
  std::vector<std::uint64_t> grid;
  // counts[i] = |{n <= grid[i] : def(n) < r}|
  std::vector<std::uint64_t> counts;
  // Least-squares slope of log count against log log N over grid points
  // with N >= 3; NaN with fewer than two such points.
  double fitted_exponent = 0;
};

GrowthScan defect_growth(const ComplexityTable& table, double r,
                         const std::vector<std::uint64_t>& grid);

struct ConjectureViolation {
  int a = 0;
  int b = 0;
  int c = 0;
  std::uint64_t n = 0;
  int cost = 0;
};

struct ConjectureReport {
  std::uint64_t limit = 0;
  std::uint64_t candidates = 0;
  std::vector<ConjectureViolation> violations;
};

// Every 2^a 3^b 5^c <= limit with a+b+c > 0 and c < 6.
ConjectureReport conjecture_scan(const ComplexityTable& table, std::uint64_t limit);

}  // namespace icx

#endif  // ICX_ANALYSIS_HPP_
