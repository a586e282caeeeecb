// Copyright 2026 The covset Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "covset/covset.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <optional>
#include <string>
#include <vector>

#include "covset/arith.hpp"
#include "covset/construct.hpp"
#include "covset/cover.hpp"
#include "covset/density.hpp"
#include "covset/error.hpp"
#include "covset/io.hpp"
#include "covset/search.hpp"
#include "covset/sweep.hpp"

struct covset_set {
  covset::CoveringSet set;
};

struct covset_omega {
  covset::ErrorSpec spec;
  covset::OmegaResult result;
  covset_set witness;
  std::uint64_t construction_size;
};

struct covset_table {
  std::vector<covset::DensityRecord> rows;
};

namespace {

thread_local std::string last_error;

covset_status fail(covset_status status, const char* what) {
  last_error = what;
  return status;
}

covset_status to_status(covset::ErrorCode code) {
  switch (code) {
    case covset::ErrorCode::invalid_argument:
      return COVSET_ERR_INVALID_ARGUMENT;
    case covset::ErrorCode::out_of_range:
      return COVSET_ERR_OUT_OF_RANGE;
    case covset::ErrorCode::not_invertible:
      return COVSET_ERR_NOT_INVERTIBLE;
    case covset::ErrorCode::modulus_mismatch:
      return COVSET_ERR_MODULUS_MISMATCH;
    case covset::ErrorCode::limit_exceeded:
      return COVSET_ERR_LIMIT_EXCEEDED;
    case covset::ErrorCode::no_bound:
      return COVSET_ERR_NO_BOUND;
    case covset::ErrorCode::parse_error:
      return COVSET_ERR_PARSE;
  }
  return COVSET_ERR_INTERNAL;
}

template <typename F>
covset_status guarded(F&& body) {
  try {
    body();
    return COVSET_OK;
  } catch (const covset::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(COVSET_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(COVSET_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(COVSET_ERR_INTERNAL, "unknown error");
  }
}

void require(const void* p, const char* name) {
  if (p == nullptr) {
    throw covset::Error(covset::ErrorCode::invalid_argument,
                        std::string(name) + " must not be NULL");
  }
}

char* duplicate(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

covset::SearchLimits limits_from(const covset_limits* limits) {
  covset::SearchLimits out;
  if (limits == nullptr) return out;
  out.max_q = limits->max_q;
  out.max_r = limits->max_r;
  out.node_budget = limits->node_budget;
  if (limits->time_budget_seconds > 0) out.time_budget_seconds = limits->time_budget_seconds;
  return out;
}

covset::IntervalResidual interval_from(const covset_set* set,
                                       const covset_interval_info* info) {
  return {set->set, info->interval_len, info->interval_size, info->residual_size};
}

}  // namespace

extern "C" {

const char* covset_status_name(covset_status status) {
  switch (status) {
    case COVSET_OK: return "ok";
    case COVSET_ERR_INVALID_ARGUMENT: return "invalid argument";
    case COVSET_ERR_OUT_OF_RANGE: return "out of range";
    case COVSET_ERR_NOT_INVERTIBLE: return "not invertible";
    case COVSET_ERR_MODULUS_MISMATCH: return "modulus mismatch";
    case COVSET_ERR_LIMIT_EXCEEDED: return "limit exceeded";
    case COVSET_ERR_NO_BOUND: return "no bound";
    case COVSET_ERR_PARSE: return "parse error";
    case COVSET_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* covset_last_error(void) { return last_error.c_str(); }

void covset_string_free(char* s) { std::free(s); }

covset_status covset_factorize(uint64_t n, uint64_t* primes, unsigned* exponents,
                               size_t cap, size_t* count) {
  return guarded([&] {
    require(count, "count");
    const auto f = covset::factorize(n);
    *count = f.factors.size();
    if (f.factors.size() > cap) {
      throw covset::Error(covset::ErrorCode::out_of_range,
                          "output buffer too small for the factorization");
    }
    if (!f.factors.empty()) {
      require(primes, "primes");
      require(exponents, "exponents");
    }
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      primes[i] = f.factors[i].prime;
      exponents[i] = f.factors[i].exponent;
    }
  });
}

covset_status covset_mod_inv(uint64_t a, uint64_t m, uint64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = covset::mod_inv(a, m);
  });
}

covset_status covset_multiplicative_order(uint64_t a, uint64_t m, uint64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = covset::multiplicative_order(a, m);
  });
}

covset_status covset_primitive_root(uint64_t p, uint64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = covset::primitive_root(p);
  });
}

covset_status covset_set_create(uint64_t q, const uint32_t* elements, size_t count,
                                covset_set** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) require(elements, "elements");
    std::vector<covset::Residue> v(elements, elements + count);
    *out = new covset_set{covset::CoveringSet(q, std::move(v))};
  });
}

covset_status covset_set_from_json(const char* json, uint64_t* q, uint64_t* lambda,
                                   uint64_t* mu, covset_set** out) {
  return guarded([&] {
    require(json, "json");
    require(out, "out");
    auto doc = covset::set_from_json(json);
    if (q != nullptr) *q = doc.spec.q();
    if (lambda != nullptr) *lambda = doc.spec.lambda();
    if (mu != nullptr) *mu = doc.spec.mu();
    *out = new covset_set{std::move(doc.set)};
  });
}

void covset_set_destroy(covset_set* set) { delete set; }

uint64_t covset_set_modulus(const covset_set* set) {
  return set == nullptr ? 0 : set->set.q();
}

size_t covset_set_size(const covset_set* set) {
  return set == nullptr ? 0 : set->set.size();
}

size_t covset_set_elements(const covset_set* set, uint32_t* buffer, size_t cap) {
  if (set == nullptr) return 0;
  const auto elems = set->set.elements();
  for (std::size_t i = 0; i < elems.size() && i < cap && buffer != nullptr; ++i) {
    buffer[i] = elems[i];
  }
  return elems.size();
}

const char* covset_set_method(const covset_set* set) {
  if (set == nullptr) return "";
  // Names are string literals, so the view is NUL-terminated.
  return covset::to_string(set->set.method()).data();
}

covset_status covset_set_to_json(const covset_set* set, uint64_t lambda, uint64_t mu,
                                 char** json) {
  return guarded([&] {
    require(set, "set");
    require(json, "json");
    const covset::ErrorSpec spec(set->set.q(), lambda, mu);
    *json = duplicate(covset::set_to_json(spec, set->set));
  });
}

covset_status covset_negate_set(const covset_set* set, covset_set** out) {
  return guarded([&] {
    require(set, "set");
    require(out, "out");
    *out = new covset_set{covset::negate_set(set->set)};
  });
}

covset_status covset_verify(uint64_t q, uint64_t lambda, uint64_t mu,
                            const covset_set* set, covset_report* report,
                            char** json) {
  return guarded([&] {
    require(set, "set");
    const covset::ErrorSpec spec(q, lambda, mu);
    const auto r = covset::verify(spec, set->set);
    if (report != nullptr) {
      report->covered_count = r.covered_count;
      report->missing_count = r.missing.size();
      report->product_count = r.product_count;
      report->is_covering = r.is_covering ? 1 : 0;
      report->is_packing = r.is_packing ? 1 : 0;
    }
    if (json != nullptr) *json = duplicate(covset::report_to_json(spec, r));
  });
}

covset_status covset_construct(uint64_t q, uint64_t lambda, uint64_t mu,
                               covset_set** out) {
  return guarded([&] {
    require(out, "out");
    *out = new covset_set{covset::construct_general(covset::ErrorSpec(q, lambda, mu))};
  });
}

covset_status covset_construct_interval(uint64_t q, uint64_t lambda, uint64_t mu,
                                        uint64_t interval_len, covset_set** out,
                                        covset_interval_info* info) {
  return guarded([&] {
    require(out, "out");
    const covset::ErrorSpec spec(q, lambda, mu);
    const std::uint64_t len =
        interval_len == 0 ? covset::default_interval_len(spec) : interval_len;
    auto r = covset::interval_plus_residual(spec, len);
    if (info != nullptr) {
      info->interval_len = r.interval_len;
      info->interval_size = r.interval_size;
      info->residual_size = r.residual_size;
    }
    *out = new covset_set{std::move(r.set)};
  });
}

covset_status covset_construction_to_json(const covset_set* set, uint64_t lambda,
                                          uint64_t mu,
                                          const covset_interval_info* info,
                                          char** json) {
  return guarded([&] {
    require(set, "set");
    require(json, "json");
    const covset::ErrorSpec spec(set->set.q(), lambda, mu);
    const bool covering = covset::verify(spec, set->set).is_covering;
    if (info != nullptr) {
      const auto interval = interval_from(set, info);
      *json = duplicate(covset::construction_to_json(spec, set->set, covering, &interval));
    } else {
      *json = duplicate(covset::construction_to_json(spec, set->set, covering));
    }
  });
}

void covset_limits_default(covset_limits* limits) {
  if (limits == nullptr) return;
  const covset::SearchLimits d;
  limits->max_q = d.max_q;
  limits->max_r = d.max_r;
  limits->node_budget = d.node_budget;
  limits->time_budget_seconds = 0.0;
}

covset_status covset_omega_exact(uint64_t q, uint64_t lambda, uint64_t mu,
                                 const covset_limits* limits, covset_omega** out) {
  return guarded([&] {
    require(out, "out");
    const covset::ErrorSpec spec(q, lambda, mu);
    auto r = covset::omega_exact(spec, limits_from(limits));
    const auto size = covset::construct_general(spec).size();
    covset_set witness{r.witness};
    *out = new covset_omega{spec, std::move(r), std::move(witness), size};
  });
}

covset_status covset_omega_greedy(uint64_t q, uint64_t lambda, uint64_t mu,
                                  covset_omega** out) {
  return guarded([&] {
    require(out, "out");
    const covset::ErrorSpec spec(q, lambda, mu);
    auto r = covset::omega_greedy(spec);
    const auto size = covset::construct_general(spec).size();
    covset_set witness{r.witness};
    *out = new covset_omega{spec, std::move(r), std::move(witness), size};
  });
}

void covset_omega_destroy(covset_omega* result) { delete result; }

uint64_t covset_omega_value(const covset_omega* result) {
  return result == nullptr ? 0 : result->result.value;
}

uint64_t covset_omega_lower_bound(const covset_omega* result) {
  return result == nullptr ? 0 : result->result.lower_bound;
}

uint64_t covset_omega_nodes(const covset_omega* result) {
  return result == nullptr ? 0 : result->result.nodes_explored;
}

int covset_omega_is_exact(const covset_omega* result) {
  return result != nullptr && result->result.exact ? 1 : 0;
}

const covset_set* covset_omega_witness(const covset_omega* result) {
  return result == nullptr ? nullptr : &result->witness;
}

covset_status covset_omega_to_json(const covset_omega* result, char** json) {
  return guarded([&] {
    require(result, "result");
    require(json, "json");
    *json = duplicate(
        covset::omega_to_json(result->spec, result->result, result->construction_size));
  });
}

covset_status covset_omega_to_csv(const covset_omega* result, int with_header,
                                  char** csv) {
  return guarded([&] {
    require(result, "result");
    require(csv, "csv");
    std::string text;
    if (with_header) text = covset::omega_csv_header() + "\n";
    text += covset::omega_to_csv_row(result->spec, result->result,
                                     result->construction_size) + "\n";
    *csv = duplicate(text);
  });
}

covset_status covset_nu_exact(uint64_t q, uint64_t lambda, uint64_t mu, uint64_t r,
                              const covset_limits* limits, uint64_t* out) {
  return guarded([&] {
    require(out, "out");
    *out = covset::nu_exact(covset::ErrorSpec(q, lambda, mu), r, limits_from(limits));
  });
}

covset_status covset_theta_exact(uint64_t q, uint64_t lambda, uint64_t mu,
                                 const covset_limits* limits, uint64_t* value,
                                 covset_set** witness) {
  return guarded([&] {
    require(value, "value");
    auto r = covset::theta_exact(covset::ErrorSpec(q, lambda, mu), limits_from(limits));
    *value = r.value;
    if (witness != nullptr) *witness = new covset_set{std::move(r.witness)};
  });
}

covset_status covset_delta_run(uint64_t p, uint64_t g, uint64_t lambda, uint64_t mu,
                               uint64_t* delta, uint64_t* implied_bound) {
  return guarded([&] {
    require(delta, "delta");
    require(implied_bound, "implied_bound");
    const covset::ErrorSpec spec(p, lambda, mu);
    const std::uint64_t root = g == 0 ? covset::primitive_root(p) : g;
    const auto run = covset::delta_run(root, spec);
    *delta = run.delta;
    *implied_bound = run.implied_bound;
  });
}

covset_status covset_sweep_csv(uint64_t q_from, uint64_t q_to, const char* lambda_rule,
                               const char* mu_rule, int primes_only, int exact,
                               const covset_limits* limits, char** csv) {
  return guarded([&] {
    require(lambda_rule, "lambda_rule");
    require(mu_rule, "mu_rule");
    require(csv, "csv");
    covset::SweepOptions options;
    options.q_from = q_from;
    options.q_to = q_to;
    options.lambda_rule = covset::SweepRule::parse(lambda_rule);
    options.mu_rule = covset::SweepRule::parse(mu_rule);
    options.primes_only = primes_only != 0;
    options.exact = exact != 0;
    options.limits = limits_from(limits);
    *csv = duplicate(covset::sweep_to_csv(covset::sweep(options), options.exact));
  });
}

covset_status covset_density(covset_density_mode mode, const uint64_t* thresholds,
                             size_t count, covset_table** out) {
  return guarded([&] {
    require(out, "out");
    if (count > 0) require(thresholds, "thresholds");
    std::span<const std::uint64_t> xs(thresholds, count);
    std::vector<covset::DensityRecord> rows;
    switch (mode) {
      case COVSET_DENSITY_Q4:
        rows = covset::count_q4(xs);
        break;
      case COVSET_DENSITY_N:
        rows = covset::count_n(xs);
        break;
      case COVSET_DENSITY_RHO:
        rows = covset::estimate_rho(xs);
        break;
      case COVSET_DENSITY_MERTENS:
        rows = covset::mertens_sweep(xs);
        break;
      default:
        throw covset::Error(covset::ErrorCode::invalid_argument, "unknown density mode");
    }
    *out = new covset_table{std::move(rows)};
  });
}

void covset_table_destroy(covset_table* table) { delete table; }

size_t covset_table_rows(const covset_table* table) {
  return table == nullptr ? 0 : table->rows.size();
}

covset_status covset_table_row(const covset_table* table, size_t index,
                               covset_density_row* row) {
  return guarded([&] {
    require(table, "table");
    require(row, "row");
    if (index >= table->rows.size()) {
      throw covset::Error(covset::ErrorCode::out_of_range, "row index out of range");
    }
    const auto& r = table->rows[index];
    *row = {r.threshold, r.count, r.normalizer, r.ratio, r.product.value_or(0.0)};
  });
}

covset_status covset_table_to_csv(const covset_table* table, char** csv) {
  return guarded([&] {
    require(table, "table");
    require(csv, "csv");
    *csv = duplicate(covset::density_to_csv(table->rows));
  });
}

covset_status covset_table_to_json(const covset_table* table, char** json) {
  return guarded([&] {
    require(table, "table");
    require(json, "json");
    *json = duplicate(covset::density_to_json(table->rows));
  });
}

covset_status covset_ell_p_divisible_by_4(uint64_t p, int* out) {
  return guarded([&] {
    require(out, "out");
    *out = covset::ell_p_divisible_by_4(p) ? 1 : 0;
  });
}

covset_status covset_is_eligible_q(uint64_t q, int* out) {
  return guarded([&] {
    require(out, "out");
    *out = covset::is_eligible_q(q) ? 1 : 0;
  });
}

covset_status covset_omega21_formula(uint64_t q, int* eligible, uint64_t* value) {
  return guarded([&] {
    require(eligible, "eligible");
    require(value, "value");
    const auto v = covset::omega21_formula(q);
    *eligible = v.has_value() ? 1 : 0;
    *value = v.value_or(0);
  });
}

covset_status covset_mertens_product(uint64_t x, double* product, double* eta_estimate) {
  return guarded([&] {
    require(product, "product");
    require(eta_estimate, "eta_estimate");
    const auto m = covset::mertens_product(x);
    *product = m.product;
    *eta_estimate = m.eta_estimate;
  });
}

}  // extern "C"
