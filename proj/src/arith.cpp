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

#include "covset/arith.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "covset/error.hpp"

namespace covset {

namespace {

void check_cap(std::uint64_t n, const char* what) {
  if (n >= kModulusCap) {
    throw Error(ErrorCode::out_of_range,
                std::string(what) + " must be below 2^31, got " +
                    std::to_string(n));
  }
}

void sort_descending(std::vector<PrimePower>& factors) {
  std::sort(factors.begin(), factors.end(),
            [](const PrimePower& a, const PrimePower& b) {
              return a.value() > b.value();
            });
}

Factorization merge(std::uint64_t n, const std::map<std::uint64_t, unsigned>& exps) {
  Factorization f;
  f.n = n;
  for (const auto& [p, e] : exps) f.factors.push_back({p, e});
  sort_descending(f.factors);
  return f;
}

}  // namespace

std::uint64_t PrimePower::value() const {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < exponent; ++i) v *= prime;
  return v;
}

std::uint64_t Factorization::recompose() const {
  std::uint64_t v = 1;
  for (const auto& f : factors) v *= f.value();
  return v;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) throw Error(ErrorCode::out_of_range, "cannot factorize 0");
  check_cap(n, "n");
  std::map<std::uint64_t, unsigned> exps;
  std::uint64_t rest = n;
  for (std::uint64_t d = 2; d * d <= rest; d += (d == 2 ? 1 : 2)) {
    while (rest % d == 0) {
      ++exps[d];
      rest /= d;
    }
  }
  if (rest > 1) ++exps[rest];
  return merge(n, exps);
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    std::uint64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return (a % m) * (b % m) % m;
}

std::uint64_t mod_pow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  if (m == 1) return 0;
  std::uint64_t result = 1;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return result;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t m) {
  if (m < 2) throw Error(ErrorCode::invalid_argument, "modulus must be >= 2");
  check_cap(m, "modulus");
  // Extended Euclid on signed values; all magnitudes stay below 2^31.
  std::int64_t old_r = static_cast<std::int64_t>(a % m);
  std::int64_t r = static_cast<std::int64_t>(m);
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t quot = old_r / r;
    std::int64_t t = old_r - quot * r;
    old_r = r;
    r = t;
    t = old_s - quot * s;
    old_s = s;
    s = t;
  }
  if (old_r != 1) {
    throw Error(ErrorCode::not_invertible,
                std::to_string(a) + " is not invertible modulo " +
                    std::to_string(m));
  }
  std::int64_t x = old_s % static_cast<std::int64_t>(m);
  if (x < 0) x += static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(x);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Factorization euler_phi_factorization(std::uint64_t m) {
  Factorization fm = factorize(m);
  std::map<std::uint64_t, unsigned> exps;
  std::uint64_t phi = 1;
  for (const auto& pp : fm.factors) {
    // phi(p^e) = p^(e-1) (p - 1)
    if (pp.exponent > 1) exps[pp.prime] += pp.exponent - 1;
    for (const auto& q : factorize(pp.prime - 1).factors) {
      exps[q.prime] += q.exponent;
    }
    phi *= pp.value() / pp.prime * (pp.prime - 1);
  }
  return merge(phi, exps);
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m,
                                   const Factorization& group_order) {
  if (m < 2) throw Error(ErrorCode::invalid_argument, "modulus must be >= 2");
  if (gcd(a % m, m) != 1) {
    throw Error(ErrorCode::not_invertible,
                std::to_string(a) + " is not a unit modulo " + std::to_string(m));
  }
  std::uint64_t order = group_order.n;
  for (const auto& pp : group_order.factors) {
    for (unsigned i = 0; i < pp.exponent; ++i) {
      if (mod_pow(a, order / pp.prime, m) != 1) break;
      order /= pp.prime;
    }
  }
  return order;
}

std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (m < 2) throw Error(ErrorCode::invalid_argument, "modulus must be >= 2");
  check_cap(m, "modulus");
  if (gcd(a % m, m) != 1) {
    throw Error(ErrorCode::not_invertible,
                std::to_string(a) + " is not a unit modulo " + std::to_string(m));
  }
  return multiplicative_order(a, m, euler_phi_factorization(m));
}

std::vector<std::uint32_t> sieve_primes(std::uint64_t x) {
  check_cap(x, "sieve limit");
  std::vector<std::uint32_t> primes;
  if (x < 2) return primes;
  std::vector<bool> composite(x + 1, false);
  for (std::uint64_t i = 2; i <= x; ++i) {
    if (composite[i]) continue;
    primes.push_back(static_cast<std::uint32_t>(i));
    for (std::uint64_t j = i * i; j <= x; j += i) composite[j] = true;
  }
  return primes;
}

SpfTable::SpfTable(std::uint64_t limit) {
  check_cap(limit, "table limit");
  spf_.assign(limit + 1, 0);
  std::vector<std::uint32_t> primes;
  // Linear sieve: each composite is written exactly once, by its least prime.
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      if (p > spf_[i] || i * p > limit) break;
      spf_[i * p] = p;
    }
  }
}

Factorization SpfTable::factorize(std::uint64_t n) const {
  if (n == 0) throw Error(ErrorCode::out_of_range, "cannot factorize 0");
  if (n > limit() && n != 1) {
    throw Error(ErrorCode::out_of_range,
                std::to_string(n) + " exceeds the SPF table limit");
  }
  Factorization f;
  f.n = n;
  while (n > 1) {
    std::uint64_t p = spf_[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    f.factors.push_back({p, e});
  }
  sort_descending(f.factors);
  return f;
}

std::uint64_t primitive_root(std::uint64_t p) {
  check_cap(p, "p");
  if (p < 3 || !is_prime(p)) {
    throw Error(ErrorCode::invalid_argument,
                std::to_string(p) + " is not an odd prime");
  }
  Factorization order = factorize(p - 1);
  for (std::uint64_t g = 2; g < p; ++g) {
    bool generator = true;
    for (const auto& pp : order.factors) {
      if (mod_pow(g, (p - 1) / pp.prime, p) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return g;
  }
  throw Error(ErrorCode::invalid_argument, "no primitive root found");
}

}  // namespace covset
