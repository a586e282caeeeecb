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

#include "covset/sweep.hpp"

#include <charconv>
#include <string>

#include "covset/arith.hpp"
#include "covset/construct.hpp"
#include "covset/cover.hpp"
#include "covset/error.hpp"

namespace covset {

namespace {

std::uint64_t parse_uint(std::string_view text) {
  std::uint64_t v = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw Error(ErrorCode::parse_error,
                "expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return v;
}

std::uint64_t ceil_sqrt(std::uint64_t n) {
  std::uint64_t r = 0;
  while (r * r < n) ++r;
  return r;
}

}  // namespace

SweepRule SweepRule::parse(std::string_view text) {
  SweepRule rule;
  if (text == "sqrt") {
    rule.kind_ = Kind::sqrt;
    return rule;
  }
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    rule.kind_ = Kind::fraction;
    rule.a_ = parse_uint(text.substr(0, slash));
    rule.b_ = parse_uint(text.substr(slash + 1));
    if (rule.b_ == 0) throw Error(ErrorCode::parse_error, "rule denominator is zero");
    return rule;
  }
  rule.a_ = parse_uint(text);
  return rule;
}

std::uint64_t SweepRule::apply(std::uint64_t q) const {
  switch (kind_) {
    case Kind::constant:
      return a_;
    case Kind::sqrt:
      return ceil_sqrt(q);
    case Kind::fraction:
      return (a_ * q + b_ - 1) / b_;
  }
  return a_;
}

std::vector<SweepRow> sweep(const SweepOptions& options) {
  if (options.q_from == 0 || options.q_to >= kModulusCap) {
    throw Error(ErrorCode::out_of_range, "sweep range must lie in [1, 2^31)");
  }
  options.limits.validate();
  if (options.exact && options.q_to > options.limits.max_q &&
      options.q_from <= options.q_to) {
    throw Error(ErrorCode::limit_exceeded,
                "exact column requested up to q = " + std::to_string(options.q_to) +
                    " but max_q = " + std::to_string(options.limits.max_q));
  }
  std::vector<SweepRow> rows;
  for (std::uint64_t q = options.q_from; q <= options.q_to; ++q) {
    if (options.primes_only && !is_prime(q)) continue;
    const std::uint64_t lambda = options.lambda_rule.apply(q);
    const std::uint64_t mu = options.mu_rule.apply(q);
    if (lambda >= q || mu >= q || lambda + mu == 0) continue;
    const ErrorSpec spec(q, lambda, mu);
    SweepRow row;
    row.q = q;
    row.lambda = lambda;
    row.mu = mu;
    row.lower_bound = covering_lower_bound(spec);
    if (options.exact) {
      const OmegaResult exact = omega_exact(spec, options.limits);
      row.omega_exact = exact.value;
      row.exact = exact.exact;
    }
    row.omega_greedy = omega_greedy(spec).value;
    row.construction_size = construct_general(spec).size();
    rows.push_back(row);
  }
  return rows;
}

std::string sweep_to_csv(const std::vector<SweepRow>& rows, bool exact_column) {
  std::string out = "q,lambda,mu,lower_bound,";
  if (exact_column) out += "omega_exact,";
  out += "omega_greedy,construction_size\n";
  for (const auto& r : rows) {
    out += std::to_string(r.q) + "," + std::to_string(r.lambda) + "," +
           std::to_string(r.mu) + "," + std::to_string(r.lower_bound) + ",";
    if (exact_column) out += std::to_string(r.omega_exact.value_or(0)) + ",";
    out += std::to_string(r.omega_greedy) + "," +
           std::to_string(r.construction_size) + "\n";
  }
  return out;
}

}  // namespace covset
