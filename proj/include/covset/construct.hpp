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

// Explicit covering-set constructions.
//
// Prime powers p^l get one of two direct constructions depending on whether
// lambda < p. A composite q is split as q~ * p^l with p^l its smallest
// prime-power factor; a (lambda, 0; q~) set is built recursively and lifted
// to Z_q. Every branch only needs the magnitudes 1..lambda, so a
// (lambda, 0; q) set is reused for any mu <= lambda, and mu > lambda is
// handled by negating the (mu, lambda; q) set.

#ifndef COVSET_CONSTRUCT_HPP
#define COVSET_CONSTRUCT_HPP

#include <cstdint>

#include "covset/cover.hpp"

namespace covset {

/// Residues s0 + s1*p with s0 in {+-j^-1 mod p : 1 <= j <= H} u {0},
/// H = ceil(p/lambda) - 1, and 0 <= s1 < p^(l-1). Requires 1 <= lambda < p.
CoveringSet construct_prime_case(std::uint64_t p, unsigned ell,
                                 std::uint64_t lambda);

/// Residues s0 + s1*p^j with s0 in {1, p, ..., p^(j-1)} u {0} and
/// 0 <= s1 < p^(l-j), where p^j <= lambda < p^(j+1). Exactly (j+1) p^(l-j)
/// elements. Requires p <= lambda < p^l.
CoveringSet construct_prime_power_large(std::uint64_t p, unsigned ell,
                                        std::uint64_t lambda);

CoveringSet construct_prime_power(std::uint64_t p, unsigned ell,
                                  std::uint64_t lambda);

/// Lifts a (lambda, 0; q~) covering set to Z_{q~ p^l}: the set is first closed
/// under multiplication by p^i for p^i <= q~, then every residue s1 is
/// extended to s1 + s2*q~ for 0 <= s2 < p^l. Requires gcd(q~, p) == 1 and
/// lambda < q~.
CoveringSet lift_small_lambda(std::uint64_t q_tilde, std::uint64_t p,
                              unsigned ell, const CoveringSet& base,
                              std::uint64_t lambda);

/// {s0 + s1*q~ : s0 in {p^i : p^i <= q~} u {0}, 0 <= s1 < p^l}; a
/// (lambda, 0; q~ p^l) covering set for every lambda >= q~.
CoveringSet composite_large_lambda(std::uint64_t q_tilde, std::uint64_t p,
                                   unsigned ell);

CoveringSet construct_general(const ErrorSpec& spec);

struct IntervalResidual {
  CoveringSet set;
  std::uint64_t interval_len = 0;  // after clamping to q - 1
  std::uint64_t interval_size = 0;  // #S0
  std::uint64_t residual_size = 0;  // #S1
};

// ceil(q / sqrt(max(lambda, mu))), computed in integers.
std::uint64_t default_interval_len(const ErrorSpec& spec);

/// S0 = {1..L} plus every residue M*S0 misses. L is clamped to q - 1.
IntervalResidual interval_plus_residual(const ErrorSpec& spec,
                                        std::uint64_t interval_len);

// Largest i with p^i <= n (n >= 1, p >= 2).
unsigned floor_log(std::uint64_t n, std::uint64_t p);

}  // namespace covset

#endif  // COVSET_CONSTRUCT_HPP
