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

#include <cmath>
#include <vector>

#include "icx/core_table.hpp"
#include "icx/digit_bounds.hpp"
#include "icx/errors.hpp"
#include "icx/expression.hpp"
#include "support.hpp"

namespace {

std::vector<std::uint32_t> bounds_of(const icx::DigitBoundTable& b) {
  return {b.bounds().begin(), b.bounds().end()};
}

}  // namespace

TEST_CASE("certified bounds for small bases") {
  const auto& t = icx::testing::table_to(10000);

  const auto b2 = icx::certify_base(t, 2);
  CHECK(bounds_of(b2) == std::vector<std::uint32_t>{2, 3});
  CHECK(b2.bound_sum() == 5);
  CHECK(b2.averaged_constant() == doctest::Approx(5 / (2 * std::log(2.0))).epsilon(1e-12));
  CHECK(b2.averaged_constant() == doctest::Approx(3.6067).epsilon(3e-5));

  const auto b6 = icx::certify_base(t, 6);
  CHECK(bounds_of(b6) == std::vector<std::uint32_t>{5, 6, 6, 6, 7, 8});
  CHECK(b6.bound_sum() == 38);

  const auto b12 = icx::certify_base(t, 12);
  CHECK(bounds_of(b12) == std::vector<std::uint32_t>{7, 8, 8, 8, 8, 9, 8, 9, 9, 9, 10, 11});
  CHECK(b12.bound_sum() == 104);
  CHECK(b12.averaged_constant() == doctest::Approx(3.48772).epsilon(1e-5));

  const auto b24 = icx::certify_base(t, 24);
  CHECK(bounds_of(b24) ==
        std::vector<std::uint32_t>{9,  10, 10, 10, 10, 11, 10, 11, 10, 11, 11, 12,
                                   10, 11, 11, 11, 11, 12, 11, 12, 12, 12, 13, 14});
  CHECK(b24.bound_sum() == 265);
  CHECK(b24.averaged_constant() == doctest::Approx(3.4743).epsilon(3e-5));
  CHECK(icx::averaged_constant(t, 24) == b24.averaged_constant());
}

TEST_CASE("witness schemas") {
  const auto& t = icx::testing::table_to(10000);
  const auto b24 = icx::certify_base(t, 24);
  CHECK(icx::format_schema(b24.witness(0)) == "24,0");
  CHECK(icx::format_schema({{2, 1}, {3, 0}}) == "2,1|3,0");
  CHECK(icx::format_schema({}) == "");
  CHECK_THROWS_AS(b24.witness(24), icx::Error);
  CHECK_THROWS_AS(b24.bound(24), icx::Error);
}

TEST_CASE("every witness realizes b*n + r with exactly bound extra ones") {
  const auto& t = icx::testing::table_to(10000);
  for (std::uint64_t m = 2; m <= 24; ++m) {
    const auto b = icx::certify_base(t, m);
    for (std::uint64_t r = 0; r < m; ++r) {
      const auto schema = b.witness(r);
      INFO("m = " << m << " r = " << r << " schema = " << icx::format_schema(schema));
      REQUIRE(icx::schema_cost(t, schema) == b.bound(r));
      std::uint64_t product = 1;
      for (const auto& step : schema) {
        REQUIRE(step.remainder < step.base);
        product *= step.base;
      }
      REQUIRE(product == m);
      for (std::uint64_t n = 1; n <= 60; ++n) {
        const auto e = icx::apply_schema(t, schema, icx::reconstruct(t, n));
        REQUIRE(icx::evaluate(e) == m * n + r);
        REQUIRE(e.ones() == static_cast<std::uint64_t>(t[n]) + b.bound(r));
      }
    }
  }
}

TEST_CASE("certified bounds dominate the trivial schema and the empirical sup") {
  const auto& t = icx::testing::table_to(24 * 10000 + 23);
  for (std::uint64_t m = 2; m <= 24; ++m) {
    const auto b = icx::certify_base(t, m);
    for (std::uint64_t r = 0; r < m; ++r) {
      INFO("m = " << m << " r = " << r);
      const int trivial = t[m] + (r > 0 ? t[r] : 0);
      CHECK(b.bound(r) <= static_cast<std::uint32_t>(trivial));
      CHECK(icx::empirical_lower(t, m, r, 10000) <= static_cast<int>(b.bound(r)));
    }
  }
}

TEST_CASE("certify_base argument checks") {
  const auto& t = icx::testing::table_to(1000);
  CHECK_THROWS_AS(icx::certify_base(t, 1), icx::Error);
  try {
    icx::certify_base(t, 1001);
    FAIL("expected throw");
  } catch (const icx::Error& e) {
    CHECK(e.kind() == icx::ErrorKind::kOutOfRange);
  }
  icx::CertifyOptions tight;
  tight.huge_threshold_bytes = 100;
  try {
    icx::certify_base(t, 720, tight);
    FAIL("expected throw");
  } catch (const icx::Error& e) {
    CHECK(e.kind() == icx::ErrorKind::kResourceLimit);
  }
  tight.allow_huge = true;
  CHECK(icx::certify_base(t, 720, tight).base() == 720);
  CHECK(icx::certify_memory_estimate(6) == (1 + 2 + 3 + 6) * 6);
  CHECK_THROWS_AS(icx::empirical_lower(t, 24, 0, 1000), icx::Error);
  CHECK_THROWS_AS(icx::empirical_lower(t, 24, 24, 10), icx::Error);
}
