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

// Statistics of the multiplicative order of 2 modulo odd primes, and the
// integers q for which omega_{2,1}(q) = (3q + 2) / 8.
//
// Sweeps take an ascending list of thresholds and return one record per
// threshold from a single pass. Logarithms are natural.

#ifndef COVSET_DENSITY_HPP
#define COVSET_DENSITY_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace covset {

struct DensityRecord {
  std::uint64_t threshold = 0;
  std::uint64_t count = 0;
  double normalizer = 0.0;
  double ratio = 0.0;  // count / normalizer, except for Mertens rows
  // Mertens rows only: the product itself (ratio then holds the eta estimate).
  std::optional<double> product;
};

/// 4 | ord_p(2). Throws unless p is an odd prime.
bool ell_p_divisible_by_4(std::uint64_t p);

/// Odd primes p <= x with 4 | ord_p(2); normalizer pi(x).
std::vector<DensityRecord> count_q4(std::span<const std::uint64_t> xs);
DensityRecord count_q4(std::uint64_t x);

/// q == 2 (mod 4), q > 2, and 4 | ord_p(2) for every odd prime p | q. The
/// vacuous q = 2 is excluded (see README, "Counting conventions").
bool is_eligible_q(std::uint64_t q);

/// Eligible q <= Q; normalizer Q / (ln Q)^(2/3).
std::vector<DensityRecord> count_n(std::span<const std::uint64_t> thresholds);
DensityRecord count_n(std::uint64_t threshold);

/// (3q + 2) / 8 for eligible q, nullopt otherwise.
std::optional<std::uint64_t> omega21_formula(std::uint64_t q);

struct MertensEstimate {
  double product = 1.0;
  double eta_estimate = 0.0;
};

/// Product of 1 + 1/(p - 1) over odd primes p <= x with 4 | ord_p(2), and
/// product / (ln x)^(1/3). Requires x >= 5.
MertensEstimate mertens_product(std::uint64_t x);
std::vector<DensityRecord> mertens_sweep(std::span<const std::uint64_t> xs);

/// Rows with ratio N(Q) (ln Q)^(2/3) / Q.
std::vector<DensityRecord> estimate_rho(std::span<const std::uint64_t> thresholds);

}  // namespace covset

#endif  // COVSET_DENSITY_HPP
