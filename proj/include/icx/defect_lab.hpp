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

// Defects, leaders and defect classes, plus the finite checks behind the
// almost-all lower bound ||n|| > 3.06 log3 n.
//
//   def(n)      = ||n|| - 3 log3 n
//   leader      : 3 does not divide n, or ||n|| < ||n/3|| + 3
//   class k     : def(n) in [(k-1) sigma, k sigma)
//   interval m  : 3^(m-1) < n <= 3^m
//
// Defects are evaluated in 80-bit extended precision. A defect closer than
// kBoundaryTolerance to a class boundary is refused rather than binned;
// powers of 3 have defect exactly 0.

#ifndef ICX_DEFECT_LAB_HPP_
#define ICX_DEFECT_LAB_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace icx {

class ComplexityTable;

inline constexpr long double kBoundaryTolerance = 1e-12L;
inline constexpr double kDefaultSigma = 0.48;
// 3^13, the default enumeration bound for the set checks.
inline constexpr std::uint64_t kDefaultScanLimit = 1594323;

bool is_power_of_three(std::uint64_t n);

// m with 3^(m-1) < n <= 3^m; 0 for n = 1.
int interval_index(std::uint64_t n);

long double defect(const ComplexityTable& table, std::uint64_t n);
bool is_leader(const ComplexityTable& table, std::uint64_t n);

// Class index k >= 1 of n under step sigma. Throws kBoundaryAmbiguity when
// def(n) lies within kBoundaryTolerance of a multiple of sigma.
int defect_class(const ComplexityTable& table, std::uint64_t n, double sigma);

struct DefectRecord {
  std::uint64_t n = 0;
  int cost = 0;
  long double defect = 0;
  bool leader = false;
  int class_index = 0;
};

DefectRecord defect_record(const ComplexityTable& table, std::uint64_t n,
                           double sigma = kDefaultSigma);

// Leader and all-integer counts per (class k, interval m).
class CensusMatrix {
 public:
  CensusMatrix(double sigma, int k_max, int m_max);

  double sigma() const noexcept { return sigma_; }
  int k_max() const noexcept { return k_max_; }
  int m_max() const noexcept { return m_max_; }

  // 1 <= k <= k_max, 1 <= m <= m_max.
  std::uint64_t leaders(int k, int m) const;
  std::uint64_t all(int k, int m) const;
  // Sum over every interval.
  std::uint64_t leaders_total(int k) const;

  void add(int k, int m, bool leader);

 private:
  std::size_t slot(int k, int m) const;

  double sigma_;
  int k_max_;
  int m_max_;
  std::vector<std::uint64_t> leaders_;
  std::vector<std::uint64_t> all_;
};

// Exact counts over 2 <= n <= 3^m_max; needs table.limit() >= 3^m_max.
CensusMatrix census(const ComplexityTable& table, double sigma, int k_max,
                    int m_max);

// Every split a + b = n costs more than ||n||.
bool is_add_irreducible(const ComplexityTable& table, std::uint64_t n);
// Every factorization d * (n/d) with 1 < d <= sqrt(n) costs more than ||n||.
bool is_mult_irreducible(const ComplexityTable& table, std::uint64_t n);

enum class CheckStatus { kPass, kFail, kReportOnly };

const char* to_string(CheckStatus status);

struct Check {
  std::string id;
  std::string description;
  std::string expected;
  std::string actual;
  CheckStatus status = CheckStatus::kFail;
  std::vector<std::string> witnesses;
};

struct VerificationReport {
  std::string suite;
  std::uint64_t scan_limit = 0;
  double sigma = 0;
  std::vector<Check> checks;

  // True when no check has status kFail.
  bool passed() const;
  const Check* find(const std::string& id) const;
};

// Re-derives the leader lists, irreducible sets, window counts, product
// class maxima and base-case counts up to scan_limit and compares each
// against its reference value. Checks are ordered a..k.
VerificationReport verify_defect_sets(const ComplexityTable& table,
                                      double sigma = kDefaultSigma,
                                      std::uint64_t scan_limit = kDefaultScanLimit);

struct ClassificationParams {
  double sigma = kDefaultSigma;
  double tau = 11.0 / 3.0;
  double big_c = 780.0;
  double lambda = (273.0 * 81.0 / 11.0) / 780.0;
  double small_c = 13.5 * (11.0 / 3.0) / 780.0;
  double eta = 1.0 / 6.0;
  double gamma = 0.06;
};

struct ConstantSystemReport {
  ClassificationParams params;
  double sigma_ceiling = 0;     // 4.5 * def(2)
  double small_c_ceiling = 0;   // 420^(-1/3)
  double terms[6] = {};
  double term_sum = 0;
  double gamma_exponent = 0;    // (gamma/sigma) * log3(C sigma / gamma)
  std::vector<Check> checks;

  bool passed() const;
};

ConstantSystemReport verify_constant_system(const ClassificationParams& params = {});

// For k = k_first..k_last, the least m >= 1 with
// lambda * (C m)^(k-2) / k^(k+1) <= 3^m.
std::vector<std::uint64_t> discard_thresholds(double lambda, double big_c,
                                              int k_first = 3, int k_last = 9);

}  // namespace icx

#endif  // ICX_DEFECT_LAB_HPP_
