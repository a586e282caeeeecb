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

// Exact and heuristic optimisation over small rings: the minimum covering
// size omega, the best coverage nu for a fixed set size, the largest packing
// theta, and the primitive-root run length delta.

#ifndef COVSET_SEARCH_HPP
#define COVSET_SEARCH_HPP

#include <cstdint>
#include <optional>

#include "covset/cover.hpp"

namespace covset {

struct SearchLimits {
  std::uint64_t max_q = 64;
  std::uint64_t max_r = 6;
  std::uint64_t node_budget = 100'000'000;
  std::optional<double> time_budget_seconds;

  // Throws Error(invalid_argument) when a cap is zero or negative.
  void validate() const;
};

struct OmegaResult {
  std::uint64_t value = 0;
  CoveringSet witness{1, {}};
  std::uint64_t lower_bound = 1;
  std::uint64_t nodes_explored = 0;
  // False when the budget ran out; value is then only an upper bound.
  bool exact = false;
};

/// Minimum covering set by branch and bound. The search branches on the
/// uncovered residue with the fewest candidate coverers (ties: smallest
/// residue), tries candidates in ascending order, and prunes a node once
/// chosen + bound >= incumbent, where bound is the larger of
/// ceil(uncovered / best single-candidate gain) and a count of uncovered
/// residues with pairwise disjoint coverer lists.
///
/// Throws Error(limit_exceeded) when q > limits.max_q.
OmegaResult omega_exact(const ErrorSpec& spec, const SearchLimits& limits = {});

/// Greedy set cover, ties broken by smallest residue. exact is always false.
OmegaResult omega_greedy(const ErrorSpec& spec);

/// max #(M*S) over r-subsets S of Z_q.
std::uint64_t nu_exact(const ErrorSpec& spec, std::uint64_t r,
                       const SearchLimits& limits = {});

struct ThetaResult {
  std::uint64_t value = 0;
  CoveringSet witness{1, {}};
  std::uint64_t nodes_explored = 0;
};

/// Largest packing set: all (lambda + mu) * N products distinct.
ThetaResult theta_exact(const ErrorSpec& spec, const SearchLimits& limits = {});

struct DeltaRun {
  std::uint64_t delta = 0;
  std::uint64_t implied_bound = 0;  // ceil((p - 1) / delta) + 1
};

/// Longest cyclic run of exponents n with g^n mod p in M. Throws
/// Error(invalid_argument) if g is not a primitive root modulo p = spec.q(),
/// and Error(no_bound) when no power of g lies in M.
DeltaRun delta_run(std::uint64_t g, const ErrorSpec& spec);

}  // namespace covset

#endif  // COVSET_SEARCH_HPP
