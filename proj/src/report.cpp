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

#include "report.hpp"

#include <cmath>

namespace icx::report {
namespace {

Json number_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

}  // namespace

Json to_json(const DefectRecord& r) {
  return Json{{"n", r.n},
              {"cost", r.cost},
              {"defect", static_cast<double>(r.defect)},
              {"leader", r.leader},
              {"class", r.class_index}};
}

Json to_json(const CensusMatrix& c) {
  Json rows = Json::array();
  for (int k = 1; k <= c.k_max(); ++k) {
    for (int m = 1; m <= c.m_max(); ++m) {
      rows.push_back({{"k", k}, {"m", m}, {"leaders", c.leaders(k, m)},
                      {"all", c.all(k, m)}});
    }
  }
  return Json{{"sigma", c.sigma()}, {"k_max", c.k_max()}, {"m_max", c.m_max()},
              {"cells", std::move(rows)}};
}

Json to_json(const Check& c) {
  return Json{{"check_id", c.id},
              {"description", c.description},
              {"expected", c.expected},
              {"actual", c.actual},
              {"status", to_string(c.status)},
              {"witnesses", c.witnesses}};
}

Json to_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const Check& c : r.checks) checks.push_back(to_json(c));
  return Json{{"suite", r.suite},
              {"scan_limit", r.scan_limit},
              {"sigma", r.sigma},
              {"passed", r.passed()},
              {"checks", std::move(checks)}};
}

Json to_json(const ConstantSystemReport& r, const std::vector<std::uint64_t>& thresholds) {
  Json checks = Json::array();
  for (const Check& c : r.checks) checks.push_back(to_json(c));
  const auto& p = r.params;
  return Json{{"suite", "constants"},
              {"params",
               {{"sigma", p.sigma},
                {"tau", p.tau},
                {"C", p.big_c},
                {"lambda", p.lambda},
                {"c", p.small_c},
                {"eta", p.eta},
                {"gamma", p.gamma}}},
              {"terms", std::vector<double>(std::begin(r.terms), std::end(r.terms))},
              {"term_sum", r.term_sum},
              {"gamma_exponent", r.gamma_exponent},
              {"discard_thresholds", thresholds},
              {"passed", r.passed()},
              {"checks", std::move(checks)}};
}

Json to_json(const DigitBoundTable& t) {
  Json rows = Json::array();
  for (std::uint64_t r = 0; r < t.base(); ++r) {
    rows.push_back({{"base", t.base()},
                    {"r", r},
                    {"bound", t.bound(r)},
                    {"witness", format_schema(t.witness(r))}});
  }
  return Json{{"base", t.base()},
              {"sum", t.bound_sum()},
              {"constant", t.averaged_constant()},
              {"bounds", std::move(rows)}};
}

Json to_json(const SynthesisResult& r) {
  const double log_n = log_big(r.n);
  return Json{{"n", r.n.get_str()},
              {"base", r.base},
              {"k", r.k},
              {"r", r.remainder},
              {"digits", r.digits},
              {"cost", r.predicted_cost},
              {"ones", r.expression.ones()},
              {"ratio_cost_over_log_n", static_cast<double>(r.predicted_cost) / log_n},
              {"evaluates_to_n", evaluate(r.expression) == r.n},
              {"expression", render(r.expression)}};
}

Json to_json(const ParamChoice& p) {
  return Json{{"n", p.n.get_str()}, {"log_n", p.log_n}, {"p", p.p}, {"K", p.k}};
}

Json to_json(const RatioPoint& p) {
  return Json{{"n", p.n}, {"cost", p.cost}, {"ratio", p.ratio}};
}

Json to_json(const DensityScan& s) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < s.grid.size(); ++i) {
    rows.push_back({{"N", s.grid[i]}, {"count", s.counts[i]}, {"fraction", s.fraction(i)}});
  }
  return Json{{"t", s.t}, {"rows", std::move(rows)}};
}

Json to_json(const GrowthScan& s) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < s.grid.size(); ++i) {
    rows.push_back({{"N", s.grid[i]}, {"r", s.r}, {"count", s.counts[i]}});
  }
  return Json{{"r", s.r},
              {"fitted_exponent", number_or_null(s.fitted_exponent)},
              {"rows", std::move(rows)}};
}

Json to_json(const ConjectureReport& r) {
  Json violations = Json::array();
  for (const auto& v : r.violations) {
    violations.push_back({{"a", v.a}, {"b", v.b}, {"c", v.c}, {"n", v.n},
                          {"cost", v.cost}, {"expected", 2 * v.a + 3 * v.b + 5 * v.c}});
  }
  return Json{{"limit", r.limit},
              {"candidates", r.candidates},
              {"passed", r.violations.empty()},
              {"violations", std::move(violations)}};
}

Json discrepancy_json(const PointSet& s) {
  Json points = Json::array();
  for (const auto& p : s.points) points.push_back(p.get_str());
  const mpq_class star = star_discrepancy(s.points);
  const mpq_class extreme = extreme_discrepancy(s.points);
  return Json{{"n", s.n.get_str()},
              {"m", s.m},
              {"j", s.j},
              {"K", s.big_k},
              {"star", star.get_d()},
              {"star_exact", star.get_str()},
              {"extreme", extreme.get_d()},
              {"extreme_exact", extreme.get_str()},
              {"points", std::move(points)}};
}

}  // namespace icx::report
