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

/* C interface to the integer-complexity engine.
 *
 * Tables are opaque handles. Every call returns an icx_status; on failure
 * icx_last_error() holds a message for the calling thread. Functions that
 * produce reports write a NUL-terminated JSON document to *out_json, which
 * the caller releases with icx_string_free(). */

#ifndef ICX_ICX_H_
#define ICX_ICX_H_

#include <stddef.h>
#include <stdint.h>

#if defined(ICX_BUILDING_LIBRARY)
#define ICX_API __attribute__((visibility("default")))
#else
#define ICX_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct icx_table icx_table;

typedef enum icx_status {
  ICX_OK = 0,
  ICX_E_INVALID_ARGUMENT = 1,
  ICX_E_OUT_OF_RANGE = 2,
  ICX_E_RESOURCE_LIMIT = 3,
  ICX_E_IO = 4,
  ICX_E_BAD_MAGIC = 5,
  ICX_E_VERSION_MISMATCH = 6,
  ICX_E_TRUNCATED = 7,
  ICX_E_CORRUPT_FILE = 8,
  ICX_E_SYNTAX = 9,
  ICX_E_BOUNDARY_AMBIGUITY = 10,
  ICX_E_INTERNAL = 11
} icx_status;

ICX_API const char* icx_version(void);
ICX_API const char* icx_status_name(icx_status status);
/* Message of the last failed call on this thread; "" if none. */
ICX_API const char* icx_last_error(void);
ICX_API void icx_string_free(char* s);
/* Normalizes an integer literal to plain decimal. Accepts underscores as
 * digit separators, scientific notation with an integral value (2.5e3) and
 * powers written a^b. */
ICX_API icx_status icx_parse_integer(const char* text, char** out_decimal);
/* 0 restores hardware concurrency. */
ICX_API void icx_set_threads(unsigned threads);

ICX_API icx_status icx_table_build(uint64_t limit, icx_table** out);
ICX_API icx_status icx_table_load(const char* path, icx_table** out);
ICX_API icx_status icx_table_save(const icx_table* table, const char* path);
ICX_API void icx_table_free(icx_table* table);
ICX_API uint64_t icx_table_limit(const icx_table* table);
ICX_API icx_status icx_query(const icx_table* table, uint64_t n, int* out);
ICX_API icx_status icx_brute_oracle(uint64_t n, int* out);

/* {"n","ones","expression"} for an optimal expression of n. */
ICX_API icx_status icx_expr(const icx_table* table, uint64_t n, char** out_json);
/* {"expression","ones","value"} for a parsed expression. */
ICX_API icx_status icx_parse(const char* text, char** out_json);

ICX_API icx_status icx_defect(const icx_table* table, uint64_t n, double sigma,
                              char** out_json);
ICX_API icx_status icx_census(const icx_table* table, double sigma, int k_max,
                              int m_max, char** out_json);
/* *passed is 1 when no check fails. */
ICX_API icx_status icx_verify_sets(const icx_table* table, double sigma,
                                   uint64_t scan_limit, char** out_json, int* passed);
ICX_API icx_status icx_verify_constants(char** out_json, int* passed);

ICX_API uint64_t icx_digit_memory_estimate(uint64_t base);
ICX_API icx_status icx_digit_bounds(const icx_table* table, uint64_t base,
                                    int allow_huge, char** out_json);

/* n is a decimal string; multipliers k run over [k_lo, k_hi). */
ICX_API icx_status icx_synth(const icx_table* table, const char* n, uint64_t base,
                             uint64_t k_lo, uint64_t k_hi, char** out_json);
ICX_API icx_status icx_params(const char* n, char** out_json);

ICX_API icx_status icx_stats_ratio(const icx_table* table, uint64_t limit,
                                   char** out_json);
ICX_API icx_status icx_stats_density(const icx_table* table, double t,
                                     const uint64_t* grid, size_t grid_len,
                                     char** out_json);
ICX_API icx_status icx_stats_growth(const icx_table* table, double r,
                                    const uint64_t* grid, size_t grid_len,
                                    char** out_json);
ICX_API icx_status icx_stats_discrepancy(const char* n, uint64_t m, uint64_t j,
                                         uint64_t big_k, char** out_json);
ICX_API icx_status icx_stats_conjecture(const icx_table* table, uint64_t limit,
                                        char** out_json);

#ifdef __cplusplus
}
#endif

#endif /* ICX_ICX_H_ */
