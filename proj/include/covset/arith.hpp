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

// Integer and modular arithmetic used by the construction, search and
// density code. Every modulus handled here is below 2^31, so products of two
// reduced residues always fit in 64 bits.

#ifndef COVSET_ARITH_HPP
#define COVSET_ARITH_HPP

#include <cstdint>
#include <vector>

namespace covset {

inline constexpr std::uint64_t kModulusCap = std::uint64_t{1} << 31;

struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;

  std::uint64_t value() const;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Prime-power decomposition of n. `factors` is sorted strictly descending by
// prime^exponent; n == 1 has no factors.
struct Factorization {
  std::uint64_t n = 1;
  std::vector<PrimePower> factors;

  std::uint64_t recompose() const;
  std::size_t distinct_primes() const { return factors.size(); }
};

// Throws Error(out_of_range) for n == 0 or n >= 2^31.
Factorization factorize(std::uint64_t n);

std::uint64_t gcd(std::uint64_t a, std::uint64_t b);
std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

// Inverse of a modulo m in [1, m). Throws Error(not_invertible) when
// gcd(a, m) != 1.
std::uint64_t mod_inv(std::uint64_t a, std::uint64_t m);

bool is_prime(std::uint64_t n);

// Euler's phi together with its factorization, used as the group order.
Factorization euler_phi_factorization(std::uint64_t m);

/// Least t >= 1 with a^t == 1 (mod m). Computed by starting from the group
/// order and stripping prime factors while the power stays 1.
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m);

/// Same, with the group order already factored (the sweep fast path).
std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m,
                                   const Factorization& group_order);

std::vector<std::uint32_t> sieve_primes(std::uint64_t x);

/// Smallest-prime-factor table over [0, limit]. Entries 0 and 1 hold 0.
class SpfTable {
 public:
  explicit SpfTable(std::uint64_t limit);

  std::uint64_t limit() const { return spf_.empty() ? 0 : spf_.size() - 1; }
  std::uint32_t operator[](std::uint64_t n) const { return spf_.at(n); }
  bool is_prime(std::uint64_t n) const { return n >= 2 && spf_.at(n) == n; }

  // Factorization of 2 <= n <= limit() (or n == 1) by repeated lookup.
  Factorization factorize(std::uint64_t n) const;

 private:
  std::vector<std::uint32_t> spf_;
};

inline SpfTable smallest_prime_factor_table(std::uint64_t x) {
  return SpfTable(x);
}

/// Smallest g >= 2 of multiplicative order p - 1. Throws unless p is an odd
/// prime.
std::uint64_t primitive_root(std::uint64_t p);

}  // namespace covset

#endif  // COVSET_ARITH_HPP
