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

#include "icx/icx.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "icx/analysis.hpp"
#include "icx/core_table.hpp"
#include "icx/defect_lab.hpp"
#include "icx/digit_bounds.hpp"
#include "icx/errors.hpp"
#include "icx/expression.hpp"
#include "icx/parallel.hpp"
#include "icx/synthesizer.hpp"
#include "report.hpp"

struct icx_table {
  icx::ComplexityTable table;
};

namespace {

thread_local std::string g_last_error;

icx_status status_of(icx::ErrorKind kind) {
  using icx::ErrorKind;
  switch (kind) {
    case ErrorKind::kInvalidArgument:
      return ICX_E_INVALID_ARGUMENT;
    case ErrorKind::kOutOfRange:
      return ICX_E_OUT_OF_RANGE;
    case ErrorKind::kResourceLimit:
      return ICX_E_RESOURCE_LIMIT;
    case ErrorKind::kIo:
      return ICX_E_IO;
    case ErrorKind::kBadMagic:
      return ICX_E_BAD_MAGIC;
    case ErrorKind::kVersionMismatch:
      return ICX_E_VERSION_MISMATCH;
    case ErrorKind::kTruncated:
      return ICX_E_TRUNCATED;
    case ErrorKind::kCorruptFile:
      return ICX_E_CORRUPT_FILE;
    case ErrorKind::kSyntax:
      return ICX_E_SYNTAX;
    case ErrorKind::kBoundaryAmbiguity:
      return ICX_E_BOUNDARY_AMBIGUITY;
  }
  return ICX_E_INTERNAL;
}

icx_status fail(icx_status status, const char* message) {
  g_last_error = message;
  return status;
}

template <typename F>
icx_status guarded(F&& body) {
  try {
    g_last_error.clear();
    body();
    return ICX_OK;
  } catch (const icx::Error& e) {
    return fail(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(ICX_E_RESOURCE_LIMIT, "out of memory");
  } catch (const std::exception& e) {
    return fail(ICX_E_INTERNAL, e.what());
  }
}

void require(bool ok, const char* what) {
  if (!ok) throw icx::Error(icx::ErrorKind::kInvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const icx::report::Json& j, char** out_json) {
  *out_json = dup_string(j.dump());
}


mpz_class parse_literal(std::string text) {
  std::erase(text, '_');
  const auto invalid = [&] {
    return icx::Error(icx::ErrorKind::kInvalidArgument, "not an integer literal: " + text);
  };
  const auto plain = [&](const std::string& digits) {
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw invalid();
    }
    return mpz_class(digits, 10);
  };
  if (const auto caret = text.find('^'); caret != std::string::npos) {
    const mpz_class base = plain(text.substr(0, caret));
    const mpz_class exponent = plain(text.substr(caret + 1));
    if (!exponent.fits_ulong_p() || exponent > 4096) throw invalid();
    mpz_class out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent.get_ui());
    return out;
  }
  if (const auto e = text.find_first_of("eE"); e != std::string::npos) {
    std::string mantissa = text.substr(0, e);
    const mpz_class exponent = plain(text.substr(e + 1));
    if (!exponent.fits_ulong_p() || exponent > 4096) throw invalid();
    long shift = static_cast<long>(exponent.get_ui());
    if (const auto dot = mantissa.find('.'); dot != std::string::npos) {
      shift -= static_cast<long>(mantissa.size() - dot - 1);
      mantissa.erase(dot, 1);
    }
    mpz_class value = plain(mantissa);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(shift < 0 ? -shift : shift));
    if (shift >= 0) return value * scale;
    if (value % scale != 0) throw invalid();
    return value / scale;
  }
  return plain(text);
}

std::vector<std::uint64_t> grid_of(const uint64_t* grid, size_t len) {
  require(grid != nullptr || len == 0, "null grid");
  return std::vector<std::uint64_t>(grid, grid + len);
}

}  // namespace

extern "C" {

const char* icx_version(void) { return "1.0.0"; }

const char* icx_status_name(icx_status status) {
  switch (status) {
    case ICX_OK:
      return "ok";
    case ICX_E_INVALID_ARGUMENT:
      return "invalid_argument";
    case ICX_E_OUT_OF_RANGE:
      return "out_of_range";
    case ICX_E_RESOURCE_LIMIT:
      return "resource_limit";
    case ICX_E_IO:
      return "io";
    case ICX_E_BAD_MAGIC:
      return "bad_magic";
    case ICX_E_VERSION_MISMATCH:
      return "version_mismatch";
    case ICX_E_TRUNCATED:
      return "truncated";
    case ICX_E_CORRUPT_FILE:
      return "corrupt_file";
    case ICX_E_SYNTAX:
      return "syntax";
    case ICX_E_BOUNDARY_AMBIGUITY:
      return "boundary_ambiguity";
    case ICX_E_INTERNAL:
      return "internal";
  }
  return "unknown";
}

const char* icx_last_error(void) { return g_last_error.c_str(); }

void icx_string_free(char* s) { std::free(s); }

icx_status icx_parse_integer(const char* text, char** out_decimal) {
  return guarded([&] {
    require(text != nullptr && out_decimal != nullptr, "null argument");
    *out_decimal = dup_string(parse_literal(text).get_str());
  });
}

void icx_set_threads(unsigned threads) { icx::set_max_threads(threads); }

icx_status icx_table_build(uint64_t limit, icx_table** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    *out = new icx_table{icx::ComplexityTable::build(limit)};
  });
}

icx_status icx_table_load(const char* path, icx_table** out) {
  return guarded([&] {
    require(out != nullptr && path != nullptr, "null argument");
    *out = new icx_table{icx::ComplexityTable::load(path)};
  });
}

icx_status icx_table_save(const icx_table* table, const char* path) {
  return guarded([&] {
    require(table != nullptr && path != nullptr, "null argument");
    table->table.save(path);
  });
}

void icx_table_free(icx_table* table) { delete table; }

uint64_t icx_table_limit(const icx_table* table) {
  return table == nullptr ? 0 : table->table.limit();
}

icx_status icx_query(const icx_table* table, uint64_t n, int* out) {
  return guarded([&] {
    require(table != nullptr && out != nullptr, "null argument");
    *out = table->table.query(n);
  });
}

icx_status icx_brute_oracle(uint64_t n, int* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = icx::brute_oracle(n);
  });
}

icx_status icx_expr(const icx_table* table, uint64_t n, char** out_json) {
  return guarded([&] {
    require(table != nullptr && out_json != nullptr, "null argument");
    const icx::Expression e = icx::reconstruct(table->table, n);
    emit({{"n", n}, {"ones", e.ones()}, {"expression", icx::render(e)}}, out_json);
  });
}

icx_status icx_parse(const char* text, char** out_json) {
  return guarded([&] {
    require(text != nullptr && out_json != nullptr, "null argument");
    const icx::Expression e = icx::parse(text);
    emit({{"expression", icx::render(e)},
          {"ones", e.ones()},
          {"value", icx::evaluate(e).get_str()}},
         out_json);
  });
}

icx_status icx_defect(const icx_table* table, uint64_t n, double sigma,
                      char** out_json) {
  return guarded([&] {
    require(table != nullptr && out_json != nullptr, "null argument");
    emit(icx::report::to_json(icx::defect_record(table->table, n, sigma)), out_json);
  });
}

icx_status icx_census(const icx_table* table, double sigma, int k_max, int m_max,
                      char** out_json) {
  return guarded([&] {
    require(table != nullptr && out_json != nullptr, "null argument");
    emit(icx::report::to_json(icx::census(table->table, sigma, k_max, m_max)),
         out_json);
  });
}

icx_status icx_verify_sets(const icx_table* table, double sigma, uint64_t scan_limit,
                           char** out_json, int* passed) {
  return guarded([&] {
    require(table != nullptr && out_json != nullptr, "null argument");
    const auto report = icx::verify_defect_sets(table->table, sigma, scan_limit);
    if (passed != nullptr) *passed = report.passed() ? 1 : 0;
    emit(icx::report::to_json(report), out_json);
  });
}

icx_status icx_verify_constants(char** out_json, int* passed) {
  return guarded([&] {
    require(out_json != nullptr, "null argument");
    const auto report = icx::verify_constant_system();
    const auto thresholds =
        icx::discard_thresholds(report.params.lambda, report.params.big_c);
    if (passed != nullptr) *passed = report.passed() ? 1 : 0;
    emit(icx::report::to_json(report, thresholds), out_json);
  });
}

uint64_t icx_digit_memory_estimate(uint64_t base) {
  return icx::certify_memory_estimate(base);
}

icx_status icx_digit_bounds(const icx_table* table, uint64_t base, int allow_huge,
                            char** out_json) {
  return guarded([&] {
    require(table != nullptr && out_json != nullptr, "null argument");
    icx::CertifyOptions options;
    options.allow_huge = allow_huge != 0;
    auto j = icx::report::to_json(icx::certify_base(table->table, base, options));
    j["memory_estimate_bytes"] = icx::certify_memory_estimate(base);
    emit(j, out_json);
  });
}

icx_status icx_synth(const icx_table* table, const char* n, uint64_t base,
                     uint64_t k_lo, uint64_t k_hi, char** out_json) {
  return guarded([&] {
    require(table != nullptr && out_json != nullptr, "null argument");
    require(n != nullptr, "missing integer");
    const mpz_class value = parse_literal(n);
    const auto bounds = icx::certify_base(table->table, base);
    emit(icx::report::to_json(
             icx::synthesize(value, base, {k_lo, k_hi}, bounds, table->table)),
         out_json);
  });
}

icx_status icx_params(const char* n, char** out_json) {
  return guarded([&] {
    require(n != nullptr && out_json != nullptr, "null argument");
    emit(icx::report::to_json(icx::asymptotic_params(parse_literal(n))), out_json);
  });
}

icx_status icx_stats_ratio(const icx_table* table, uint64_t limit, char** out_json) {
  return guarded([&] {
    require(table != nullptr && out_json != nullptr, "null argument");
    emit(icx::report::to_json(icx::ratio_scan(table->table, limit)), out_json);
  });
}

icx_status icx_stats_density(const icx_table* table, double t, const uint64_t* grid,
                             size_t grid_len, char** out_json) {
  return guarded([&] {
    require(table != nullptr && out_json != nullptr, "null argument");
    emit(icx::report::to_json(
             icx::density_scan(table->table, t, grid_of(grid, grid_len))),
         out_json);
  });
}

icx_status icx_stats_growth(const icx_table* table, double r, const uint64_t* grid,
                            size_t grid_len, char** out_json) {
  return guarded([&] {
    require(table != nullptr && out_json != nullptr, "null argument");
    emit(icx::report::to_json(
             icx::defect_growth(table->table, r, grid_of(grid, grid_len))),
         out_json);
  });
}

icx_status icx_stats_discrepancy(const char* n, uint64_t m, uint64_t j,
                                 uint64_t big_k, char** out_json) {
  return guarded([&] {
    require(n != nullptr && out_json != nullptr, "null argument");
    emit(icx::report::discrepancy_json(icx::s_j_points(parse_literal(n), m, j, big_k)),
         out_json);
  });
}

icx_status icx_stats_conjecture(const icx_table* table, uint64_t limit,
                                char** out_json) {
  return guarded([&] {
    require(table != nullptr && out_json != nullptr, "null argument");
    emit(icx::report::to_json(icx::conjecture_scan(table->table, limit)), out_json);
  });
}

}  // extern "C"
