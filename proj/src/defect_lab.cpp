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

#include "icx/defect_lab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "icx/core_table.hpp"
#include "icx/errors.hpp"

namespace icx {
namespace {

std::string format_double(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

template <typename Range>
std::string set_string(const Range& values) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : values) {
    if (!first) out += ',';
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

template <typename Range>
std::string list_string(const Range& values) {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += ',';
    out += std::to_string(v);
  }
  return out;
}

std::uint64_t pow3(int m) {
  std::uint64_t p = 1;
  for (int i = 0; i < m; ++i) p *= 3;
  return p;
}

// Class of a defect value; exact zero (powers of 3) is never ambiguous.
int classify(long double def, double sigma, bool exact, std::uint64_t n) {
  const long double step = sigma;
  if (!exact) {
    const long double nearest = std::round(def / step);
    if (nearest >= 1 && std::fabs(def - nearest * step) < kBoundaryTolerance) {
      throw Error(ErrorKind::kBoundaryAmbiguity,
                  "def(" + std::to_string(n) + ") is within " +
                      std::to_string(static_cast<double>(kBoundaryTolerance)) +
                      " of the class boundary " +
                      std::to_string(static_cast<double>(nearest * step)));
    }
  }
  return static_cast<int>(std::floor(def / step)) + 1;
}

void require_limit(const ComplexityTable& table, std::uint64_t needed,
                   const char* what) {
  if (table.limit() < needed) {
    throw Error(ErrorKind::kOutOfRange,
                std::string(what) + " needs a complexity table up to " +
                    std::to_string(needed) + ", have " +
                    std::to_string(table.limit()));
  }
}

Check make_check(std::string id, std::string description, std::string expected,
                 std::string actual, bool ok) {
  Check c;
  c.id = std::move(id);
  c.description = std::move(description);
  c.expected = std::move(expected);
  c.actual = std::move(actual);
  c.status = ok ? CheckStatus::kPass : CheckStatus::kFail;
  return c;
}

}  // namespace

bool is_power_of_three(std::uint64_t n) {
  if (n == 0) return false;
  while (n % 3 == 0) n /= 3;
  return n == 1;
}

int interval_index(std::uint64_t n) {
  if (n == 0) throw Error(ErrorKind::kInvalidArgument, "interval of 0");
  int m = 0;
  std::uint64_t p = 1;
  while (p < n) {
    p *= 3;
    ++m;
  }
  return m;
}

long double defect(const ComplexityTable& table, std::uint64_t n) {
  const int cost = table.query(n);
  if (n >= 3 && is_power_of_three(n)) {
    return static_cast<long double>(cost - 3 * interval_index(n));
  }
  return static_cast<long double>(cost) - three_log3(static_cast<long double>(n));
}

bool is_leader(const ComplexityTable& table, std::uint64_t n) {
  const int cost = table.query(n);
  return n % 3 != 0 || cost < table[n / 3] + 3;
}

int defect_class(const ComplexityTable& table, std::uint64_t n, double sigma) {
  if (!(sigma > 0)) throw Error(ErrorKind::kInvalidArgument, "sigma must be > 0");
  return classify(defect(table, n), sigma, n >= 3 && is_power_of_three(n), n);
}

DefectRecord defect_record(const ComplexityTable& table, std::uint64_t n,
                           double sigma) {
  DefectRecord r;
  r.n = n;
  r.cost = table.query(n);
  r.defect = defect(table, n);
  r.leader = is_leader(table, n);
  r.class_index = defect_class(table, n, sigma);
  return r;
}

CensusMatrix::CensusMatrix(double sigma, int k_max, int m_max)
    : sigma_(sigma), k_max_(k_max), m_max_(m_max) {
  if (k_max < 1 || m_max < 1) {
    throw Error(ErrorKind::kInvalidArgument, "census needs k_max, m_max >= 1");
  }
  const auto cells = static_cast<std::size_t>(k_max) * static_cast<std::size_t>(m_max);
  leaders_.assign(cells, 0);
  all_.assign(cells, 0);
}

std::size_t CensusMatrix::slot(int k, int m) const {
  if (k < 1 || k > k_max_ || m < 1 || m > m_max_) {
    throw Error(ErrorKind::kOutOfRange,
                "census cell (" + std::to_string(k) + ", " + std::to_string(m) +
                    ") outside 1.." + std::to_string(k_max_) + " x 1.." +
                    std::to_string(m_max_));
  }
  return static_cast<std::size_t>(k - 1) * m_max_ + static_cast<std::size_t>(m - 1);
}

std::uint64_t CensusMatrix::leaders(int k, int m) const { return leaders_[slot(k, m)]; }
std::uint64_t CensusMatrix::all(int k, int m) const { return all_[slot(k, m)]; }

std::uint64_t CensusMatrix::leaders_total(int k) const {
  std::uint64_t total = 0;
  for (int m = 1; m <= m_max_; ++m) total += leaders(k, m);
  return total;
}

void CensusMatrix::add(int k, int m, bool leader) {
  const std::size_t s = slot(k, m);
  ++all_[s];
  if (leader) ++leaders_[s];
}

CensusMatrix census(const ComplexityTable& table, double sigma, int k_max,
                    int m_max) {
  if (m_max < 1 || m_max > 40) {
    throw Error(ErrorKind::kInvalidArgument, "census m_max must be in 1..40");
  }
  CensusMatrix out(sigma, k_max, m_max);
  const std::uint64_t top = pow3(m_max);
  require_limit(table, top, "census");
  int m = 1;
  std::uint64_t interval_top = 3;
  for (std::uint64_t n = 2; n <= top; ++n) {
    if (n > interval_top) {
      ++m;
      interval_top *= 3;
    }
    const int k = defect_class(table, n, sigma);
    if (k <= k_max) out.add(k, m, is_leader(table, n));
  }
  return out;
}

bool is_add_irreducible(const ComplexityTable& table, std::uint64_t n) {
  const int cost = table.query(n);
  for (std::uint64_t a = 1; a <= n / 2; ++a) {
    if (table[a] + table[n - a] <= cost) return false;
  }
  return true;
}

bool is_mult_irreducible(const ComplexityTable& table, std::uint64_t n) {
  const int cost = table.query(n);
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0 && table[d] + table[n / d] <= cost) return false;
  }
  return true;
}

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kReportOnly:
      return "report-only";
  }
  return "fail";
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) {
    return c.status == CheckStatus::kFail;
  });
}

const Check* VerificationReport::find(const std::string& id) const {
  for (const Check& c : checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

VerificationReport verify_defect_sets(const ComplexityTable& table, double sigma,
                                      std::uint64_t scan_limit) {
  constexpr std::uint64_t kMinScan = 65536;  // 256 * 256, largest product in (i)
  if (scan_limit < kMinScan) {
    throw Error(ErrorKind::kInvalidArgument,
                "set checks need a scan limit of at least " + std::to_string(kMinScan));
  }
  require_limit(table, scan_limit, "set checks");

  VerificationReport report;
  report.suite = "paper";
  report.scan_limit = scan_limit;
  report.sigma = sigma;
  const std::string bound_note =
      " (verified up to " + std::to_string(scan_limit) + ")";

  // Leaders of class 1 and 2 in [2, scan_limit].
  std::vector<std::uint64_t> class1, class2;
  for (std::uint64_t n = 2; n <= scan_limit; ++n) {
    if (!is_leader(table, n)) continue;
    const long double def = defect(table, n);
    if (def >= 2 * static_cast<long double>(sigma) + 1e-3L) continue;
    const int k = classify(def, sigma, n >= 3 && is_power_of_three(n), n);
    if (k == 1) class1.push_back(n);
    if (k == 2) class2.push_back(n);
  }

  {
    const std::vector<std::uint64_t> expected = {2, 3, 4, 8, 16};
    report.checks.push_back(make_check(
        "a", "leaders with defect below sigma" + bound_note,
        set_string(expected), set_string(class1), class1 == expected));
  }
  {
    const std::vector<std::uint64_t> expected = {5,  7,  10, 14, 19,  20,
                                                 28, 32, 40, 64, 128, 256};
    report.checks.push_back(make_check(
        "b", "leaders with defect in [sigma, 2 sigma)" + bound_note,
        set_string(expected), set_string(class2), class2 == expected));
  }

  // Census over complete intervals 3^m <= scan_limit.
  int m_top = 0;
  while (pow3(m_top + 1) <= scan_limit) ++m_top;
  const CensusMatrix counts = census(table, sigma, 3, m_top);
  {
    std::vector<std::uint64_t> per_interval;
    std::uint64_t worst = 0;
    for (int m = 1; m <= m_top; ++m) {
      per_interval.push_back(counts.leaders(2, m));
      worst = std::max(worst, counts.leaders(2, m));
    }
    Check c = make_check("c", "max over m of U_B(2,m), 3^m <= scan limit",
                         "<= 4", std::to_string(worst), worst <= 4);
    c.witnesses.push_back("U_B(2,m) for m=1.." + std::to_string(m_top) + ": " +
                          list_string(per_interval));
    report.checks.push_back(std::move(c));
  }

  {
    const double cutoff =
        1.0 / (std::pow(3.0, (1.0 - sigma) / 3.0) - 1.0) + 1.0;
    const auto cutoff_floor = static_cast<std::uint64_t>(std::floor(cutoff));
    std::vector<std::uint64_t> t_any = {1}, t_irreducible = {1};
    for (std::uint64_t n = 2; static_cast<double>(n) < cutoff; ++n) {
      if (!is_mult_irreducible(table, n)) continue;
      bool split_any = false, split_irreducible = false;
      for (std::uint64_t b = 2; b <= n / 2; ++b) {
        if (table[n] == table[n - b] + table[b]) {
          split_any = true;
          if (is_add_irreducible(table, b)) split_irreducible = true;
        }
      }
      if (!split_any) t_any.push_back(n);
      if (!split_irreducible) t_irreducible.push_back(n);
    }
    const std::vector<std::uint64_t> expected = {1, 2, 3};
    Check c = make_check(
        "d", "T_sigma: 1 and multiplicatively irreducible n below the cutoff "
             "with no optimal split n = (n-b) + b, 1 < b <= n/2",
        "cutoff floor 5, T=" + set_string(expected),
        "cutoff floor " + std::to_string(cutoff_floor) + ", T=" + set_string(t_any),
        cutoff_floor == 5 && t_any == expected);
    c.witnesses.push_back("cutoff=" + format_double(cutoff));
    c.witnesses.push_back("restricting b to additively irreducible values gives T=" +
                          set_string(t_irreducible));
    report.checks.push_back(std::move(c));
  }

  {
    std::vector<std::uint64_t> z;
    for (std::uint64_t b = 1; b <= 27; ++b) {
      if (is_add_irreducible(table, b)) z.push_back(b);
    }
    const std::vector<std::uint64_t> expected = {1,  6,  8,  9,  12, 14, 15,
                                                 16, 18, 20, 21, 24, 26, 27};
    Check c = make_check("e", "additively irreducible b <= 27", set_string(expected),
                         set_string(z), z == expected);
    c.witnesses.push_back("|Z|=" + std::to_string(z.size()));
    report.checks.push_back(std::move(c));
  }

  std::vector<std::uint64_t> small_leaders = class1;
  small_leaders.insert(small_leaders.end(), class2.begin(), class2.end());
  std::sort(small_leaders.begin(), small_leaders.end());

  {
    std::vector<std::uint64_t> literal;
    for (std::uint64_t x : small_leaders) {
      const bool halves = x % 2 == 0 && table[x] == table[2] + table[x / 2];
      if (!halves) literal.push_back(x);
    }
    const std::vector<std::uint64_t> listed = {3, 5, 7, 10, 19, 28};
    Check c;
    c.id = "f";
    c.description =
        "set A: class 1-2 leaders x without an optimal split x = 2*(x/2)";
    c.expected = set_string(listed);
    c.actual = set_string(literal);
    c.status = CheckStatus::kReportOnly;
    c.witnesses.push_back(literal == listed ? "literal predicate agrees"
                                            : "literal predicate disagrees");
    for (std::uint64_t x : {std::uint64_t{10}, std::uint64_t{28}}) {
      c.witnesses.push_back("||" + std::to_string(x) + "||=" +
                            std::to_string(table[x]) + ", ||2||+||" +
                            std::to_string(x / 2) + "||=" +
                            std::to_string(table[2] + table[x / 2]));
    }
    report.checks.push_back(std::move(c));
  }

  {
    std::vector<std::uint64_t> v = {1};
    for (std::uint64_t x : class1) {
      if (x != 3) v.push_back(x);
    }
    std::sort(v.begin(), v.end());
    const std::vector<std::uint64_t> expected = {1, 2, 4, 8, 16};
    report.checks.push_back(make_check("g", "V = {1} u (class-1 leaders minus 3)",
                                       set_string(expected), set_string(v),
                                       v == expected));
  }

  {
    std::size_t best = 0;
    std::size_t best_i = 0, best_j = 0;
    for (std::size_t i = 0; i < small_leaders.size(); ++i) {
      for (std::size_t j = i; j < small_leaders.size(); ++j) {
        if (small_leaders[j] < 4 * small_leaders[i] && j - i + 1 > best) {
          best = j - i + 1;
          best_i = i;
          best_j = j;
        }
      }
    }
    Check c = make_check("h", "max class 1-2 leaders in a window (x, 4x]", "7",
                         std::to_string(best), best == 7);
    if (best > 0) {
      const std::vector<std::uint64_t> members(small_leaders.begin() + best_i,
                                               small_leaders.begin() + best_j + 1);
      c.witnesses.push_back("(" + format_double(small_leaders[best_j] / 4.0, 2) +
                            ", " + std::to_string(small_leaders[best_j]) + "] contains " +
                            set_string(members));
    }
    report.checks.push_back(std::move(c));
  }

  {
    std::set<std::uint64_t> products;
    for (std::uint64_t u : small_leaders) {
      for (std::uint64_t v : small_leaders) products.insert(u * v);
    }
    std::map<std::pair<int, int>, std::vector<std::uint64_t>> bins;
    for (std::uint64_t x : products) {
      bins[{defect_class(table, x, sigma), interval_index(x)}].push_back(x);
    }
    std::map<int, std::size_t> q;
    std::map<int, std::string> q_witness;
    for (const auto& [key, members] : bins) {
      if (members.size() > q[key.first]) {
        q[key.first] = members.size();
        q_witness[key.first] = "Q" + std::to_string(key.first) + ": m=" +
                               std::to_string(key.second) + " " + set_string(members);
      }
    }
    const std::map<int, std::size_t> expected = {{3, 8}, {4, 9}, {5, 1}, {6, 0},
                                                 {7, 0}, {8, 0}, {9, 0}, {10, 0}};
    std::string exp_s, act_s;
    bool ok = true;
    for (const auto& [p, value] : expected) {
      const std::size_t got = q.count(p) ? q.at(p) : 0;
      if (!exp_s.empty()) {
        exp_s += ',';
        act_s += ',';
      }
      exp_s += "Q" + std::to_string(p) + "=" + std::to_string(value);
      act_s += "Q" + std::to_string(p) + "=" + std::to_string(got);
      ok = ok && got == value;
    }
    Check c = make_check("i",
                         "Q_p: max per interval of products uv (u, v class 1-2 "
                         "leaders) with defect class p",
                         exp_s, act_s, ok);
    c.witnesses.push_back(std::to_string(products.size()) + " distinct products of " +
                          std::to_string(small_leaders.size()) + " leaders");
    for (const auto& [p, w] : q_witness) c.witnesses.push_back(w);
    // 361 = 19^2 sits next to the class 4/5 boundary.
    if (products.count(361)) {
      char buf[128];
      std::snprintf(buf, sizeof(buf), "def(361)=%.9Lf, 4*sigma=%.2f",
                    defect(table, 361), 4 * sigma);
      c.witnesses.push_back(buf);
    }
    report.checks.push_back(std::move(c));
  }

  {
    const std::vector<std::uint64_t> expected = {18, 36, 55, 73, 89, 105, 120};
    std::vector<std::uint64_t> all, leaders, cumulative;
    std::uint64_t running = 0;
    for (int m = 1; m <= std::min(m_top, 10); ++m) {
      running += counts.leaders(3, m);
      if (m < 4) continue;
      all.push_back(counts.all(3, m));
      leaders.push_back(counts.leaders(3, m));
      cumulative.push_back(running);
    }
    Check c = make_check("j",
                         "U(3,m) for m=4..10, counted over all integers of "
                         "class 3 in (3^(m-1), 3^m]",
                         list_string(expected), list_string(all), all == expected);
    c.witnesses.push_back("leaders only, U_B(3,m): " + list_string(leaders));
    c.witnesses.push_back("leaders up to 3^m, sum_{r<=m} U_B(3,r): " +
                          list_string(cumulative));
    report.checks.push_back(std::move(c));
  }

  report.checks.push_back(make_check(
      "k", "||4|| = ||2|| + ||2||", std::to_string(table[2] + table[2]),
      std::to_string(table[4]), table[4] == table[2] + table[2]));
  return report;
}

bool ConstantSystemReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) {
    return c.status == CheckStatus::kFail;
  });
}

ConstantSystemReport verify_constant_system(const ClassificationParams& params) {
  ConstantSystemReport r;
  r.params = params;
  const double log3 = std::log(3.0);
  r.sigma_ceiling = 4.5 * (2.0 - 3.0 * std::log(2.0) / log3);
  r.small_c_ceiling = std::cbrt(1.0 / 420.0);

  const double c = params.small_c;
  const double big_c = params.big_c;
  const double e_eta = std::exp(params.eta);
  r.terms[0] = 127.0 * e_eta / ((2.0 - 3.0 * c) * big_c);
  r.terms[1] = 88.0 * e_eta * params.lambda / big_c;
  r.terms[2] = 425.0 / ((2.0 - 3.0 * c) * big_c);
  r.terms[3] = 8199.0 * e_eta * c / ((1.0 - c) * big_c * big_c);
  r.terms[4] = 11124.0 * c * c * e_eta /
               ((1.0 - 420.0 * c * c * c) * (2.0 - 3.0 * c) * big_c);
  r.terms[5] = 5682.0 / (params.lambda * big_c * big_c);
  r.term_sum = 0;
  for (double t : r.terms) r.term_sum += t;
  r.gamma_exponent = (params.gamma / params.sigma) *
                     std::log(big_c * params.sigma / params.gamma) / log3;

  r.checks.push_back(make_check("i", "sigma < 4.5 def(2)",
                                "< " + format_double(r.sigma_ceiling),
                                format_double(params.sigma),
                                params.sigma < r.sigma_ceiling));
  r.checks.push_back(make_check(
      "ii", "lambda >= 2.5 and c < 420^(-1/3)",
      "lambda >= 2.5, c < " + format_double(r.small_c_ceiling),
      "lambda=" + format_double(params.lambda) + ", c=" + format_double(c),
      params.lambda >= 2.5 && c < r.small_c_ceiling));
  Check sum = make_check("iii", "sum of the six lower bounds on c_1..c_6", "< 1",
                         format_double(r.term_sum), r.term_sum < 1.0);
  for (int i = 0; i < 6; ++i) {
    sum.witnesses.push_back("term" + std::to_string(i + 1) + "=" +
                            format_double(r.terms[i], 9));
  }
  r.checks.push_back(std::move(sum));
  r.checks.push_back(make_check("iv", "(gamma/sigma) log3(C sigma / gamma)", "< 1",
                                format_double(r.gamma_exponent),
                                r.gamma_exponent < 1.0));
  return r;
}

std::vector<std::uint64_t> discard_thresholds(double lambda, double big_c,
                                              int k_first, int k_last) {
  if (!(lambda > 0) || !(big_c > 0) || k_first < 3 || k_last < k_first) {
    throw Error(ErrorKind::kInvalidArgument,
                "discard thresholds need lambda, C > 0 and 3 <= k_first <= k_last");
  }
  const long double log3 = std::log(3.0L);
  std::vector<std::uint64_t> out;
  for (int k = k_first; k <= k_last; ++k) {
    std::uint64_t m = 1;
    for (;; ++m) {
      const long double lhs =
          std::log(static_cast<long double>(lambda)) +
          (k - 2) * std::log(static_cast<long double>(big_c) * m) -
          (k + 1) * std::log(static_cast<long double>(k));
      if (lhs <= m * log3) break;
    }
    out.push_back(m);
  }
  return out;
}

}  // namespace icx
