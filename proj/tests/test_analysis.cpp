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

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "icx/analysis.hpp"
#include "icx/core_table.hpp"
#include "icx/errors.hpp"
#include "icx/parallel.hpp"
#include "support.hpp"

using icx::testing::kPow3_13;
using icx::testing::table_to;

namespace {

// Sup over intervals with endpoints in {0, x_i, 1}, closed and open, by
// direct counting. Cubic; small sets only.
template <typename T>
T brute_extreme(const std::vector<T>& x) {
  std::vector<T> ends = x;
  ends.push_back(T(0));
  ends.push_back(T(1));
  const T k = T(static_cast<long>(x.size()));
  T best = 0;
  for (const T& a : ends) {
    for (const T& b : ends) {
      if (b < a) continue;
      long closed = 0, open = 0;
      for (const T& v : x) {
        if (a <= v && v <= b) ++closed;
        if (a < v && v < b) ++open;
      }
      best = std::max<T>(best, T(closed) / k - (b - a));
      best = std::max<T>(best, (b - a) - T(open) / k);
    }
  }
  return best;
}

}  // namespace

TEST_CASE("S_j points") {
  const auto s = icx::s_j_points(100, 2, 1, 3);
  REQUIRE(s.points.size() == 3);
  CHECK(s.points[0] == mpq_class(1, 2));
  CHECK(s.points[1] == mpq_class(1, 2));
  CHECK(s.points[2] == 0);
  for (const auto& p : icx::s_j_points(123456789, 7, 0, 20).points) CHECK(p == 0);

  const auto big = icx::s_j_points(mpz_class("1000000000000"), 2, 20, 64);
  REQUIRE(big.points.size() == 64);
  for (const auto& p : big.points) {
    CHECK(p >= 0);
    CHECK(p < 1);
  }
  CHECK(icx::star_discrepancy(big.points) == mpq_class(11067, 131072));
  CHECK(icx::extreme_discrepancy(big.points) == mpq_class(142115, 1048576));
  CHECK(icx::star_discrepancy(big.points) < mpq_class(1, 4));

  CHECK_THROWS_AS(icx::s_j_points(100, 1, 1, 3), icx::Error);
  CHECK_THROWS_AS(icx::s_j_points(100, 2, 1, 0), icx::Error);
}

TEST_CASE("closed forms for star discrepancy") {
  CHECK(icx::star_discrepancy(std::vector<double>{0.25, 0.75}) == 0.25);
  CHECK(icx::star_discrepancy(std::vector<mpq_class>{mpq_class(1, 4), mpq_class(3, 4)}) ==
        mpq_class(1, 4));
  for (long k : {1L, 2L, 7L, 100L}) {
    std::vector<mpq_class> mid;
    for (long i = 1; i <= k; ++i) mid.emplace_back(2 * i - 1, 2 * k);
    CHECK(icx::star_discrepancy(mid) == mpq_class(1, 2 * k));
    CHECK(icx::extreme_discrepancy(mid) == mpq_class(1, k));
  }
  CHECK(icx::star_discrepancy(std::vector<double>{0.0}) == 1.0);
  CHECK_THROWS_AS(icx::star_discrepancy(std::vector<double>{}), icx::Error);
  CHECK_THROWS_AS(icx::extreme_discrepancy(std::vector<mpq_class>{}), icx::Error);
}

TEST_CASE("extreme discrepancy agrees with the brute-force sup") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t k = 1 + rng() % 60;
    std::vector<double> xs;
    std::vector<mpq_class> qs;
    for (std::size_t i = 0; i < k; ++i) {
      // Coarse grid so ties occur.
      const unsigned long num = rng() % 97;
      qs.emplace_back(num, 97);
      qs.back().canonicalize();
      xs.push_back(static_cast<double>(num) / 97);
    }
    INFO("trial " << trial << " K = " << k);
    const mpq_class exact = icx::extreme_discrepancy(qs);
    CHECK(exact == brute_extreme(qs));
    CHECK(std::fabs(icx::extreme_discrepancy(xs) - brute_extreme(xs)) < 1e-12);
    const mpq_class star = icx::star_discrepancy(qs);
    CHECK(star <= exact);
    CHECK(exact <= 2 * star);
    CHECK(mpq_class(1, 2 * static_cast<long>(k)) <= star);
    CHECK(star <= 1);
  }
}

TEST_CASE("ratio scan") {
  const auto& t = table_to(1000000);
  const auto small = icx::ratio_scan(t, 10);
  CHECK(small.n == 5);
  CHECK(small.ratio == doctest::Approx(5 / std::log(5.0)));
  const auto r = icx::ratio_scan(t, 1000000);
  CHECK(r.n == 1439);
  CHECK(r.cost == 26);
  CHECK(r.ratio == doctest::Approx(3.5756).epsilon(3e-4));
  CHECK(r.ratio < 3 / std::log(2.0));
  for (std::uint64_t p = 3; p <= 1000000; p *= 3) {
    CHECK(t[p] / std::log(static_cast<double>(p)) ==
          doctest::Approx(3 / std::log(3.0)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(icx::ratio_scan(t, 1), icx::Error);
  CHECK_THROWS_AS(icx::ratio_scan(t, 1000001), icx::Error);
}

TEST_CASE("density scan") {
  const auto& t = table_to(1000000);
  const auto low = icx::density_scan(t, 2.0, {10, 1000, 1000000});
  CHECK(low.counts == std::vector<std::uint64_t>{0, 0, 0});

  const auto d = icx::density_scan(t, 3.06, {10000, 1000000});
  CHECK(d.counts == std::vector<std::uint64_t>{23, 55});
  CHECK(d.fraction(1) < d.fraction(0));
  const auto powers = icx::density_scan(t, 3.0, {1000000});
  CHECK(powers.counts[0] == 12);  // 3^1 .. 3^12

  CHECK_THROWS_AS(icx::density_scan(t, 3.06, {}), icx::Error);
  CHECK_THROWS_AS(icx::density_scan(t, 3.06, {100, 10}), icx::Error);
  CHECK_THROWS_AS(icx::density_scan(t, 3.06, {2000000}), icx::Error);
}

TEST_CASE("defect growth") {
  const auto& t = table_to(kPow3_13);
  // Only the powers 3^1..3^m have defect below 0.1.
  const auto g = icx::defect_growth(t, 0.1, {2, 3, 100, 1000, kPow3_13});
  CHECK(g.counts == std::vector<std::uint64_t>{0, 1, 4, 6, 13});

  // Below 0.48: 3^t times 1, 2, 4, 8 or 16.
  const auto s = icx::defect_growth(t, 0.48, {kPow3_13});
  std::uint64_t expected = 0;
  for (std::uint64_t b : {1, 2, 4, 8, 16}) {
    for (std::uint64_t p = b; p <= kPow3_13; p *= 3) expected += p > 1 ? 1 : 0;
  }
  CHECK(s.counts[0] == expected);
  CHECK(s.counts[0] == 61);
  CHECK(std::isnan(s.fitted_exponent));

  const auto one = icx::defect_growth(t, 1.0, {100, 1000, 10000, 100000, kPow3_13});
  CHECK(std::is_sorted(one.counts.begin(), one.counts.end()));
  CHECK(one.fitted_exponent > 1.0);
  CHECK(one.fitted_exponent < 3.0);
  CHECK_THROWS_AS(icx::defect_growth(t, 0.0, {100}), icx::Error);
}

TEST_CASE("2^a 3^b 5^c scan") {
  const auto& t = table_to(1000000);
  CHECK(t[16] == 8);
  CHECK(t[30] == 10);
  const auto r = icx::conjecture_scan(t, 1000000);
  CHECK(r.violations.empty());
  CHECK(r.candidates > 300);
  CHECK(icx::conjecture_scan(t, 1).candidates == 0);
  CHECK(icx::conjecture_scan(t, 6).candidates == 5);  // 2 3 4 5 6
}

TEST_CASE("scans do not depend on the thread count") {
  const auto& t = table_to(1000000);
  icx::set_max_threads(1);
  const auto r1 = icx::ratio_scan(t, 1000000);
  const auto d1 = icx::density_scan(t, 3.06, {5000, 700000});
  icx::set_max_threads(5);
  const auto r5 = icx::ratio_scan(t, 1000000);
  const auto d5 = icx::density_scan(t, 3.06, {5000, 700000});
  icx::set_max_threads(0);
  CHECK(r1.n == r5.n);
  CHECK(r1.ratio == r5.ratio);
  CHECK(d1.counts == d5.counts);
  CHECK(icx::max_threads() >= 1);
}
