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

// Acceptance run: one [PASS]/[FAIL] line per criterion AC1..AC11.
//
//   icx_acceptance            run everything
//   icx_acceptance AC5 AC7    run a subset
//
// Exit status is 0 only when every selected criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "icx/analysis.hpp"
#include "icx/core_table.hpp"
#include "icx/defect_lab.hpp"
#include "icx/digit_bounds.hpp"
#include "icx/errors.hpp"
#include "icx/expression.hpp"
#include "icx/synthesizer.hpp"

namespace fs = std::filesystem;
using namespace icx;

namespace {

constexpr std::uint64_t kBig = 10000000;
constexpr std::uint64_t kPow3_13 = 1594323;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Outcome of one criterion: pass flag plus detail lines.
struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    notes.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
  }
  void note(const std::string& what) { notes.push_back("     " + what); }
};

std::string str(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

std::string sci(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.3g", v);
  return buf;
}

double big_build_seconds = 0;

const ComplexityTable& big_table() {
  static std::unique_ptr<ComplexityTable> table;
  if (!table) {
    const auto start = Clock::now();
    table = std::make_unique<ComplexityTable>(ComplexityTable::build(kBig));
    big_build_seconds = seconds_since(start);
  }
  return *table;
}

std::vector<char> slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& p, const std::vector<char>& bytes) {
  std::ofstream out(p, std::ios::binary | std::ios::trunc);
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

Outcome ac1() {
  Outcome o;
  const auto start = Clock::now();
  const auto table = ComplexityTable::build(2000);
  const auto oracle = brute_oracle_range(2000);
  std::uint64_t mismatches = 0;
  for (std::uint64_t n = 1; n <= 2000; ++n) mismatches += table[n] != oracle[n - 1];
  const double elapsed = seconds_since(start);
  o.require(mismatches == 0, "entries differing from the brute-force recursion: " +
                                 std::to_string(mismatches));
  o.require(elapsed < 10, "build + oracle time " + str(elapsed, 3) + " s < 10 s");
  return o;
}

Outcome ac2() {
  Outcome o;
  const auto& t = big_table();
  o.note("table to 10^7 built in " + str(big_build_seconds, 3) + " s");
  o.require(big_build_seconds < 600, "build to 10^7 within minutes");
  o.require(t[6] == 5 && t[11] == 8 && t[12] == 7 && t[1439] == 26,
            "||6||=5, ||11||=8, ||12||=7, ||1439||=26");
  bool powers = true;
  std::uint64_t p = 1;
  for (int k = 1; k <= 12; ++k) {
    p *= 3;
    powers = powers && t[p] == 3 * k;
  }
  o.require(powers, "||3^k|| = 3k for k <= 12");
  std::uint64_t violations = 0;
  for (std::uint64_t n = 2; n <= kBig; ++n) {
    const long double x = static_cast<long double>(n);
    if (three_log3(x) > t[n] + 1e-12L || t[n] > 3 * std::log2(x) + 1e-12L) ++violations;
  }
  o.require(violations == 0,
            "3 log3 n <= ||n|| <= 3 log2 n for n <= 10^7, violations " +
                std::to_string(violations));
  return o;
}

Outcome ac3() {
  Outcome o;
  const auto r = ratio_scan(big_table(), 1000000);
  o.require(r.n == 1439, "argmax n* = " + std::to_string(r.n));
  o.require(std::fabs(r.ratio - 3.5756) <= 1e-3, "ratio " + str(r.ratio) + " = 3.5756 +- 1e-3");
  return o;
}

Outcome ac4() {
  Outcome o;
  const auto& t = big_table();
  const auto b2 = certify_base(t, 2);
  const auto b6 = certify_base(t, 6);
  const auto b12 = certify_base(t, 12);
  const auto b24 = certify_base(t, 24);
  o.require(b2.bound_sum() == 5, "base 2 sum " + std::to_string(b2.bound_sum()));
  o.require(std::fabs(b2.averaged_constant() - 3.6067) <= 1e-4,
            "base 2 constant " + str(b2.averaged_constant()));
  o.require(b24.bound_sum() == 265, "base 24 sum " + std::to_string(b24.bound_sum()));
  o.require(std::fabs(b24.averaged_constant() - 3.4743) <= 1e-4,
            "base 24 constant " + str(b24.averaged_constant()));
  o.require(b6.bound_sum() == 38, "base 6 sum " + std::to_string(b6.bound_sum()));
  o.require(b12.bound_sum() == 104, "base 12 sum " + std::to_string(b12.bound_sum()));

  std::uint64_t unsound = 0, above = 0, schemas = 0;
  for (std::uint64_t m = 2; m <= 24; ++m) {
    const auto b = certify_base(t, m);
    for (std::uint64_t r = 0; r < m; ++r) {
      const auto schema = b.witness(r);
      ++schemas;
      bool ok = schema_cost(t, schema) == b.bound(r);
      for (std::uint64_t n = 1; n <= 200 && ok; ++n) {
        const auto e = apply_schema(t, schema, reconstruct(t, n));
        ok = evaluate(e) == m * n + r &&
             e.ones() == static_cast<std::uint64_t>(t[n]) + b.bound(r);
      }
      unsound += !ok;
      above += empirical_lower(t, m, r, 10000) > static_cast<int>(b.bound(r));
    }
  }
  o.require(unsound == 0, std::to_string(schemas) + " witness schemas applied, unsound " +
                              std::to_string(unsound));
  o.require(above == 0, "empirical_lower above the certified bound: " + std::to_string(above));
  return o;
}

Outcome ac5() {
  Outcome o;
  const auto table = ComplexityTable::build(kPow3_13);
  const auto start = Clock::now();
  const auto report = verify_defect_sets(table, kDefaultSigma, kPow3_13);
  const double elapsed = seconds_since(start);
  for (const Check& c : report.checks) {
    if (c.id == "f") {
      o.require(c.status == CheckStatus::kReportOnly,
                "(f) report-only: listed " + c.expected + ", computed " + c.actual);
      continue;
    }
    o.require(c.status == CheckStatus::kPass,
              "(" + c.id + ") expected " + c.expected + ", actual " + c.actual);
    if (c.status == CheckStatus::kFail) {
      for (const auto& w : c.witnesses) o.note(w);
    }
  }
  o.require(elapsed < 300, "suite time " + str(elapsed, 3) + " s < 300 s");
  return o;
}

Outcome ac6() {
  Outcome o;
  const auto r = verify_constant_system();
  o.require(std::fabs(r.term_sum - 0.798) < 1e-3 && r.term_sum < 1,
            "six-term sum " + str(r.term_sum) + " ~ 0.798 < 1");
  o.require(std::fabs(r.gamma_exponent - 0.9943) < 1e-4 && r.gamma_exponent < 1,
            "gamma check " + str(r.gamma_exponent) + " ~ 0.9943 < 1");
  o.require(r.passed(), "all scalar checks pass");
  const auto m = discard_thresholds(r.params.lambda, r.params.big_c);
  std::string list;
  for (auto v : m) list += (list.empty() ? "" : ",") + std::to_string(v);
  o.require(m == std::vector<std::uint64_t>{5, 12, 19, 26, 33, 41, 48},
            "discard thresholds k=3..9: " + list);
  return o;
}

Outcome ac7() {
  Outcome o;
  const auto& t = big_table();
  const auto b24 = certify_base(t, 24);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> dist(1000000000ULL, 1000000000000ULL);
  double sum = 0, worst = 0;
  std::uint64_t inexact = 0, miscounted = 0;
  for (int i = 0; i < 1000; ++i) {
    const mpz_class n = static_cast<unsigned long>(dist(rng));
    const auto r = synthesize(n, 24, {1, 64}, b24, t);
    inexact += evaluate(r.expression) != n;
    miscounted += r.expression.ones() != r.predicted_cost;
    const double ratio = static_cast<double>(r.expression.ones()) / log_big(n);
    sum += ratio;
    worst = std::max(worst, ratio);
  }
  o.require(inexact == 0, "expressions not evaluating to n: " + std::to_string(inexact));
  o.require(miscounted == 0, "ones != predicted cost: " + std::to_string(miscounted));
  o.require(sum / 1000 <= 3.6, "mean ones/log n " + str(sum / 1000) + " <= 3.6");
  o.require(worst <= 4.2, "max ones/log n " + str(worst) + " <= 4.2");

  std::uniform_int_distribution<std::uint64_t> small(2, kBig);
  std::uint64_t below = 0;
  for (int i = 0; i < 1000; ++i) {
    const std::uint64_t n = small(rng);
    const auto r = synthesize(n, 24, {1, 64}, b24, t);
    below += r.expression.ones() < static_cast<std::uint64_t>(t[n]) || evaluate(r.expression) != n;
  }
  o.require(below == 0, "1000 samples n <= 10^7: ones >= ||n||, failures " + std::to_string(below));
  return o;
}

// Sup over intervals with endpoints in {0, x_i, 1} by counting with binary
// search; independent of the linear-time formula.
double brute_extreme(std::vector<double> x) {
  std::sort(x.begin(), x.end());
  std::vector<double> ends = x;
  ends.push_back(0);
  ends.push_back(1);
  const double k = static_cast<double>(x.size());
  double best = 0;
  for (double a : ends) {
    for (double b : ends) {
      if (b < a) continue;
      const auto closed = std::upper_bound(x.begin(), x.end(), b) -
                          std::lower_bound(x.begin(), x.end(), a);
      auto open = std::lower_bound(x.begin(), x.end(), b) -
                  std::upper_bound(x.begin(), x.end(), a);
      if (open < 0) open = 0;
      best = std::max(best, static_cast<double>(closed) / k - (b - a));
      best = std::max(best, (b - a) - static_cast<double>(open) / k);
    }
  }
  return best;
}

Outcome ac8() {
  Outcome o;
  o.require(star_discrepancy(std::vector<double>{0.25, 0.75}) == 0.25 &&
                star_discrepancy(std::vector<mpq_class>{mpq_class(1, 4), mpq_class(3, 4)}) ==
                    mpq_class(1, 4),
            "D*{0.25, 0.75} = 1/4");
  bool midpoints = true;
  for (long k = 1; k <= 200; ++k) {
    std::vector<mpq_class> mid;
    for (long i = 1; i <= k; ++i) mid.emplace_back(2 * i - 1, 2 * k);
    midpoints = midpoints && star_discrepancy(mid) == mpq_class(1, 2 * k);
  }
  o.require(midpoints, "midpoint sets K=1..200: D* = 1/(2K)");

  std::mt19937_64 rng(8);
  double worst = 0;
  bool sandwich = true;
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t k = 1 + rng() % 200;
    std::vector<double> x(k);
    for (auto& v : x) v = std::ldexp(static_cast<double>(rng() >> 11), -53);
    if (trial % 5 == 0) {
      for (auto& v : x) v = std::floor(v * 16) / 16;  // with ties
    }
    const double fast = extreme_discrepancy(x);
    worst = std::max(worst, std::fabs(fast - brute_extreme(x)));
    const double star = star_discrepancy(x);
    sandwich = sandwich && star <= fast + 1e-15 && fast <= 2 * star + 1e-15;
  }
  const auto s = s_j_points(mpz_class("1000000000000"), 2, 20, 64);
  const mpq_class star = star_discrepancy(s.points);
  const mpq_class ext = extreme_discrepancy(s.points);
  sandwich = sandwich && star <= ext && ext <= 2 * star;
  o.require(worst <= 1e-12, "50 random sets: max |fast - brute force| = " + sci(worst));
  o.require(sandwich, "D* <= extreme <= 2 D* on every set");
  o.note("S_20 for n=10^12, m=2, K=64: D* = " + star.get_str() + ", extreme = " + ext.get_str());
  return o;
}

Outcome ac9() {
  Outcome o;
  const auto r = conjecture_scan(big_table(), kBig);
  o.require(r.violations.empty(), std::to_string(r.candidates) + " candidates <= 10^7, violations " +
                                      std::to_string(r.violations.size()));
  return o;
}

icx::ErrorKind load_kind(const fs::path& p) {
  try {
    ComplexityTable::load(p);
  } catch (const Error& e) {
    return e.kind();
  }
  return static_cast<icx::ErrorKind>(-1);
}

Outcome ac10() {
  Outcome o;
  const fs::path dir = fs::temp_directory_path() / ("icx_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  for (std::uint64_t limit : {std::uint64_t{10000}, kBig}) {
    const auto built = limit == kBig ? big_table() : ComplexityTable::build(limit);
    const fs::path a = dir / "a.bin", b = dir / "b.bin";
    built.save(a);
    const auto loaded = ComplexityTable::load(a);
    loaded.save(b);
    o.require(loaded == built && slurp(a) == slurp(b),
              "round trip bit-identical at limit " + std::to_string(limit));
  }
  const fs::path good = dir / "good.bin", bad = dir / "bad.bin";
  ComplexityTable::build(1000).save(good);
  const auto bytes = slurp(good);
  auto b = bytes;
  b[1] = 'Z';
  spit(bad, b);
  const auto magic = load_kind(bad);
  b = bytes;
  b[4] = 9;
  spit(bad, b);
  const auto version = load_kind(bad);
  spit(bad, std::vector<char>(bytes.begin(), bytes.end() - 10));
  const auto truncated = load_kind(bad);
  spit(bad, std::vector<char>(bytes.begin(), bytes.begin() + 12));
  const auto short_header = load_kind(bad);
  fs::remove_all(dir);
  o.require(magic == ErrorKind::kBadMagic, "corrupted magic rejected as bad magic");
  o.require(version == ErrorKind::kVersionMismatch, "wrong version rejected as version mismatch");
  o.require(truncated == ErrorKind::kTruncated && short_header == ErrorKind::kTruncated,
            "short payload and short header rejected as truncated");
  o.require(magic != version && version != truncated && magic != truncated,
            "the three cases carry distinct errors");
  return o;
}

Outcome ac11() {
  Outcome o;
  const auto d = density_scan(big_table(), 3.06, {10000, 1000000});
  o.note("counts " + std::to_string(d.counts[0]) + " (N=10^4), " + std::to_string(d.counts[1]) +
         " (N=10^6)");
  o.require(d.fraction(1) < d.fraction(0),
            "fraction " + str(d.fraction(1), 8) + " (10^6) < " + str(d.fraction(0), 8) + " (10^4)");
  o.require(d.counts[0] == 23 && d.counts[1] == 55, "regression counts 23 and 55");
  return o;
}

struct Criterion {
  const char* id;
  const char* title;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {"AC1", "oracle equivalence to 2000", ac1},
      {"AC2", "known values and sandwich to 10^7", ac2},
      {"AC3", "ratio extremum at 1439", ac3},
      {"AC4", "certified digit bounds", ac4},
      {"AC5", "defect-set suite at 3^13", ac5},
      {"AC6", "constant system", ac6},
      {"AC7", "synthesizer on random n", ac7},
      {"AC8", "discrepancy", ac8},
      {"AC9", "2^a 3^b 5^c scan to 10^7", ac9},
      {"AC10", "persistence", ac10},
      {"AC11", "density trend", ac11},
  };
  std::set<std::string> selected(argv + 1, argv + argc);
  int failures = 0;
  for (const auto& c : all) {
    if (!selected.empty() && !selected.count(c.id)) continue;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    std::printf("[%s] %s %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title,
                seconds_since(start));
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    failures += !o.pass;
  }
  std::printf("%d failed\n", failures);
  return failures == 0 ? 0 : 1;
}
