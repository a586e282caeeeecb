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

// Error specifications, candidate sets and the product-set oracle.
//
// For a modulus q and magnitudes M = {-mu, ..., lambda} \ {0}, a set S of
// residues is a covering set when every residue of Z_q equals m*s mod q for
// some m in M and s in S, and a packing set when all |M|*|S| such products
// are distinct.

#ifndef COVSET_COVER_HPP
#define COVSET_COVER_HPP

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace covset {

using Residue = std::uint32_t;

class ErrorSpec {
 public:
  // Requires 1 <= q < 2^31, lambda, mu < q and lambda + mu >= 1. The ring
  // Z_1 admits no such pair, so q == 1 accepts lambda, mu <= 1 instead.
  ErrorSpec(std::uint64_t q, std::uint64_t lambda, std::uint64_t mu);

  std::uint64_t q() const { return q_; }
  std::uint64_t lambda() const { return lambda_; }
  std::uint64_t mu() const { return mu_; }
  // |M| = lambda + mu.
  std::uint64_t weight() const { return lambda_ + mu_; }

  ErrorSpec swapped() const { return ErrorSpec(q_, mu_, lambda_); }

  friend bool operator==(const ErrorSpec&, const ErrorSpec&) = default;

 private:
  std::uint64_t q_;
  std::uint64_t lambda_;
  std::uint64_t mu_;
};

enum class Method {
  prime_inverse,
  prime_power_large,
  composite_small_lambda,
  composite_large_lambda,
  trivial_pair,
  interval_residual,
  explicit_set,
};

std::string_view to_string(Method m);
// Throws Error(parse_error) for unknown names.
Method method_from_string(std::string_view name);

class CoveringSet {
 public:
  // Sorts and deduplicates; throws Error(out_of_range) if an element is not
  // in [0, q).
  CoveringSet(std::uint64_t q, std::vector<Residue> elements,
              Method method = Method::explicit_set);

  std::uint64_t q() const { return q_; }
  std::span<const Residue> elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  Method method() const { return method_; }

  friend bool operator==(const CoveringSet&, const CoveringSet&) = default;

 private:
  std::uint64_t q_;
  std::vector<Residue> elements_;
  Method method_;
};

struct CoverageReport {
  std::uint64_t covered_count = 0;
  std::vector<Residue> missing;
  bool is_covering = false;
  std::uint64_t product_count = 0;
  bool is_packing = false;
};

/// The lambda + mu signed magnitudes, ascending.
std::vector<std::int64_t> magnitude_set(const ErrorSpec& spec);

/// Bit-vector of M*S over Z_q. Throws Error(modulus_mismatch).
std::vector<bool> product_mask(const ErrorSpec& spec, const CoveringSet& s);

/// M*S as an ascending list of residues.
std::vector<Residue> product_set(const ErrorSpec& spec, const CoveringSet& s);

CoverageReport verify(const ErrorSpec& spec, const CoveringSet& s);

/// {(q - s) mod q}, same method tag.
CoveringSet negate_set(const CoveringSet& s);

/// {u*s mod q}, same method tag.
CoveringSet scale_set(const CoveringSet& s, std::uint64_t u);

// ceil(q / (lambda + mu)) when lambda + mu < q, else 1.
std::uint64_t covering_lower_bound(const ErrorSpec& spec);

}  // namespace covset

#endif  // COVSET_COVER_HPP
