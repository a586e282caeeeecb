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

#include "covset/cover.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <utility>

#include "covset/arith.hpp"
#include "covset/error.hpp"

namespace covset {

namespace {

constexpr std::array<std::pair<Method, std::string_view>, 7> kMethodNames{{
    {Method::prime_inverse, "prime-inverse"},
    {Method::prime_power_large, "prime-power-large"},
    {Method::composite_small_lambda, "composite-small-lambda"},
    {Method::composite_large_lambda, "composite-large-lambda"},
    {Method::trivial_pair, "trivial-pair"},
    {Method::interval_residual, "interval-residual"},
    {Method::explicit_set, "explicit"},
}};

void require_same_modulus(const ErrorSpec& spec, const CoveringSet& s) {
  if (spec.q() != s.q()) {
    throw Error(ErrorCode::modulus_mismatch,
                "set lives in Z_" + std::to_string(s.q()) +
                    " but the spec has q = " + std::to_string(spec.q()));
  }
}

}  // namespace

ErrorSpec::ErrorSpec(std::uint64_t q, std::uint64_t lambda, std::uint64_t mu)
    : q_(q), lambda_(lambda), mu_(mu) {
  if (q == 0 || q >= kModulusCap) {
    throw Error(ErrorCode::out_of_range,
                "q must satisfy 1 <= q < 2^31, got " + std::to_string(q));
  }
  const std::uint64_t bound = q == 1 ? 2 : q;
  if (lambda >= bound || mu >= bound) {
    throw Error(ErrorCode::out_of_range,
                "lambda and mu must be below q (lambda=" +
                    std::to_string(lambda) + ", mu=" + std::to_string(mu) +
                    ", q=" + std::to_string(q) + ")");
  }
  if (lambda + mu == 0) {
    throw Error(ErrorCode::invalid_argument, "lambda + mu must be at least 1");
  }
}

std::string_view to_string(Method m) {
  for (const auto& [method, name] : kMethodNames) {
    if (method == m) return name;
  }
  return "explicit";
}

Method method_from_string(std::string_view name) {
  for (const auto& [method, n] : kMethodNames) {
    if (n == name) return method;
  }
  throw Error(ErrorCode::parse_error,
              "unknown method '" + std::string(name) + "'");
}

CoveringSet::CoveringSet(std::uint64_t q, std::vector<Residue> elements,
                         Method method)
    : q_(q), elements_(std::move(elements)), method_(method) {
  if (q == 0 || q >= kModulusCap) {
    throw Error(ErrorCode::out_of_range, "q must satisfy 1 <= q < 2^31");
  }
  for (Residue e : elements_) {
    if (e >= q) {
      throw Error(ErrorCode::out_of_range,
                  "element " + std::to_string(e) + " is not a residue modulo " +
                      std::to_string(q));
    }
  }
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()),
                  elements_.end());
}

std::vector<std::int64_t> magnitude_set(const ErrorSpec& spec) {
  std::vector<std::int64_t> m;
  m.reserve(spec.weight());
  const auto mu = static_cast<std::int64_t>(spec.mu());
  const auto lambda = static_cast<std::int64_t>(spec.lambda());
  for (std::int64_t v = -mu; v <= lambda; ++v) {
    if (v != 0) m.push_back(v);
  }
  return m;
}

std::vector<bool> product_mask(const ErrorSpec& spec, const CoveringSet& s) {
  require_same_modulus(spec, s);
  const std::uint64_t q = spec.q();
  std::vector<bool> mask(q, false);
  for (Residue e : s.elements()) {
    // Walk m = 1..lambda and m = -1..-mu by repeated addition; no products.
    const std::uint64_t neg = (q - e) % q;
    std::uint64_t r = 0;
    for (std::uint64_t m = 1; m <= spec.lambda(); ++m) {
      r += e;
      if (r >= q) r -= q;
      mask[r] = true;
    }
    r = 0;
    for (std::uint64_t m = 1; m <= spec.mu(); ++m) {
      r += neg;
      if (r >= q) r -= q;
      mask[r] = true;
    }
  }
  return mask;
}

std::vector<Residue> product_set(const ErrorSpec& spec, const CoveringSet& s) {
  const auto mask = product_mask(spec, s);
  std::vector<Residue> out;
  for (std::uint64_t r = 0; r < mask.size(); ++r) {
    if (mask[r]) out.push_back(static_cast<Residue>(r));
  }
  return out;
}

CoverageReport verify(const ErrorSpec& spec, const CoveringSet& s) {
  const auto mask = product_mask(spec, s);
  CoverageReport report;
  for (std::uint64_t r = 0; r < mask.size(); ++r) {
    if (mask[r]) {
      ++report.covered_count;
    } else {
      report.missing.push_back(static_cast<Residue>(r));
    }
  }
  report.product_count = report.covered_count;
  report.is_covering = report.missing.empty();
  report.is_packing = report.product_count == spec.weight() * s.size();
  return report;
}

CoveringSet negate_set(const CoveringSet& s) {
  std::vector<Residue> out;
  out.reserve(s.size());
  for (Residue e : s.elements()) {
    out.push_back(static_cast<Residue>((s.q() - e) % s.q()));
  }
  return CoveringSet(s.q(), std::move(out), s.method());
}

CoveringSet scale_set(const CoveringSet& s, std::uint64_t u) {
  std::vector<Residue> out;
  out.reserve(s.size());
  for (Residue e : s.elements()) {
    out.push_back(static_cast<Residue>(mod_mul(e, u, s.q())));
  }
  return CoveringSet(s.q(), std::move(out), s.method());
}

std::uint64_t covering_lower_bound(const ErrorSpec& spec) {
  if (spec.weight() >= spec.q()) return 1;
  return (spec.q() + spec.weight() - 1) / spec.weight();
}

}  // namespace covset
