/* Copyright 2026 The covset Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the covset library.
 *
 * Every fallible call returns a covset_status; on failure a human-readable
 * message is available from covset_last_error() on the same thread until the
 * next failing call. Handles are opaque and owned by the caller, who releases
 * them with the matching *_destroy function. Strings returned through char**
 * out-parameters are heap-allocated and released with covset_string_free().
 */

#ifndef COVSET_COVSET_H
#define COVSET_COVSET_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define COVSET_API __declspec(dllexport)
#else
#define COVSET_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum covset_status {
  COVSET_OK = 0,
  COVSET_ERR_INVALID_ARGUMENT = 1,
  COVSET_ERR_OUT_OF_RANGE = 2,
  COVSET_ERR_NOT_INVERTIBLE = 3,
  COVSET_ERR_MODULUS_MISMATCH = 4,
  COVSET_ERR_LIMIT_EXCEEDED = 5,
  COVSET_ERR_NO_BOUND = 6,
  COVSET_ERR_PARSE = 7,
  COVSET_ERR_INTERNAL = 99
} covset_status;

COVSET_API const char* covset_status_name(covset_status status);
COVSET_API const char* covset_last_error(void);
COVSET_API void covset_string_free(char* s);

/* ---- arithmetic -------------------------------------------------------- */

/* Writes up to `cap` prime powers, largest prime power first. `*count`
 * always receives the number of distinct primes; COVSET_ERR_OUT_OF_RANGE is
 * returned if it exceeds `cap`. */
COVSET_API covset_status covset_factorize(uint64_t n, uint64_t* primes,
                                          unsigned* exponents, size_t cap,
                                          size_t* count);
COVSET_API covset_status covset_mod_inv(uint64_t a, uint64_t m, uint64_t* out);
COVSET_API covset_status covset_multiplicative_order(uint64_t a, uint64_t m,
                                                     uint64_t* out);
COVSET_API covset_status covset_primitive_root(uint64_t p, uint64_t* out);

/* ---- sets -------------------------------------------------------------- */

typedef struct covset_set covset_set;

typedef struct covset_report {
  uint64_t covered_count;
  uint64_t missing_count;
  uint64_t product_count;
  int is_covering;
  int is_packing;
} covset_report;

typedef struct covset_interval_info {
  uint64_t interval_len;
  uint64_t interval_size;
  uint64_t residual_size;
} covset_interval_info;

/* Elements are sorted and deduplicated; the method tag is "explicit". */
COVSET_API covset_status covset_set_create(uint64_t q, const uint32_t* elements,
                                           size_t count, covset_set** out);
/* Parses a covering-set document; lambda/mu may be NULL. */
COVSET_API covset_status covset_set_from_json(const char* json, uint64_t* q,
                                              uint64_t* lambda, uint64_t* mu,
                                              covset_set** out);
COVSET_API void covset_set_destroy(covset_set* set);
COVSET_API uint64_t covset_set_modulus(const covset_set* set);
COVSET_API size_t covset_set_size(const covset_set* set);
/* Copies min(size, cap) elements; returns the full size. */
COVSET_API size_t covset_set_elements(const covset_set* set, uint32_t* buffer,
                                      size_t cap);
COVSET_API const char* covset_set_method(const covset_set* set);
COVSET_API covset_status covset_set_to_json(const covset_set* set,
                                            uint64_t lambda, uint64_t mu,
                                            char** json);
COVSET_API covset_status covset_negate_set(const covset_set* set,
                                           covset_set** out);

/* `json` may be NULL; otherwise it receives the full report document. */
COVSET_API covset_status covset_verify(uint64_t q, uint64_t lambda, uint64_t mu,
                                       const covset_set* set,
                                       covset_report* report, char** json);

/* ---- constructions ----------------------------------------------------- */

COVSET_API covset_status covset_construct(uint64_t q, uint64_t lambda,
                                          uint64_t mu, covset_set** out);
/* interval_len == 0 selects ceil(q / sqrt(max(lambda, mu))). `info` may be
 * NULL. */
COVSET_API covset_status covset_construct_interval(uint64_t q, uint64_t lambda,
                                                   uint64_t mu,
                                                   uint64_t interval_len,
                                                   covset_set** out,
                                                   covset_interval_info* info);
/* Construction document including "is_covering" (and the interval fields
 * when `info` is non-NULL). */
COVSET_API covset_status covset_construction_to_json(
    const covset_set* set, uint64_t lambda, uint64_t mu,
    const covset_interval_info* info, char** json);

/* ---- search ------------------------------------------------------------ */

typedef struct covset_limits {
  uint64_t max_q;
  uint64_t max_r;
  uint64_t node_budget;
  double time_budget_seconds; /* <= 0 means unlimited */
} covset_limits;

typedef struct covset_omega covset_omega;

COVSET_API void covset_limits_default(covset_limits* limits);

/* `limits` may be NULL for the defaults. */
COVSET_API covset_status covset_omega_exact(uint64_t q, uint64_t lambda,
                                            uint64_t mu,
                                            const covset_limits* limits,
                                            covset_omega** out);
COVSET_API covset_status covset_omega_greedy(uint64_t q, uint64_t lambda,
                                             uint64_t mu, covset_omega** out);
COVSET_API void covset_omega_destroy(covset_omega* result);
COVSET_API uint64_t covset_omega_value(const covset_omega* result);
COVSET_API uint64_t covset_omega_lower_bound(const covset_omega* result);
COVSET_API uint64_t covset_omega_nodes(const covset_omega* result);
COVSET_API int covset_omega_is_exact(const covset_omega* result);
/* Borrowed; valid while the result lives. */
COVSET_API const covset_set* covset_omega_witness(const covset_omega* result);
/* JSON row, or a CSV row (optionally preceded by the header line). */
COVSET_API covset_status covset_omega_to_json(const covset_omega* result,
                                              char** json);
COVSET_API covset_status covset_omega_to_csv(const covset_omega* result,
                                             int with_header, char** csv);

COVSET_API covset_status covset_nu_exact(uint64_t q, uint64_t lambda,
                                         uint64_t mu, uint64_t r,
                                         const covset_limits* limits,
                                         uint64_t* out);
/* `witness` may be NULL. */
COVSET_API covset_status covset_theta_exact(uint64_t q, uint64_t lambda,
                                            uint64_t mu,
                                            const covset_limits* limits,
                                            uint64_t* value,
                                            covset_set** witness);
/* g == 0 selects the smallest primitive root of p. */
COVSET_API covset_status covset_delta_run(uint64_t p, uint64_t g,
                                          uint64_t lambda, uint64_t mu,
                                          uint64_t* delta,
                                          uint64_t* implied_bound);

/* Sweep CSV; see the README for the rule syntax. */
COVSET_API covset_status covset_sweep_csv(uint64_t q_from, uint64_t q_to,
                                          const char* lambda_rule,
                                          const char* mu_rule, int primes_only,
                                          int exact, const covset_limits* limits,
                                          char** csv);

/* ---- density ----------------------------------------------------------- */

typedef enum covset_density_mode {
  COVSET_DENSITY_Q4 = 0,
  COVSET_DENSITY_N = 1,
  COVSET_DENSITY_RHO = 2,
  COVSET_DENSITY_MERTENS = 3
} covset_density_mode;

typedef struct covset_density_row {
  uint64_t threshold;
  uint64_t count;
  double normalizer;
  double ratio;
  double product; /* Mertens rows only; 0 otherwise */
} covset_density_row;

typedef struct covset_table covset_table;

COVSET_API covset_status covset_density(covset_density_mode mode,
                                        const uint64_t* thresholds,
                                        size_t count, covset_table** out);
COVSET_API void covset_table_destroy(covset_table* table);
COVSET_API size_t covset_table_rows(const covset_table* table);
COVSET_API covset_status covset_table_row(const covset_table* table,
                                          size_t index, covset_density_row* row);
COVSET_API covset_status covset_table_to_csv(const covset_table* table,
                                             char** csv);
COVSET_API covset_status covset_table_to_json(const covset_table* table,
                                              char** json);

COVSET_API covset_status covset_ell_p_divisible_by_4(uint64_t p, int* out);
COVSET_API covset_status covset_is_eligible_q(uint64_t q, int* out);
/* *eligible receives 0 (and *value 0) for ineligible q. */
COVSET_API covset_status covset_omega21_formula(uint64_t q, int* eligible,
                                                uint64_t* value);
COVSET_API covset_status covset_mertens_product(uint64_t x, double* product,
                                                double* eta_estimate);

#ifdef __cplusplus
}
#endif

#endif /* COVSET_COVSET_H */
