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

#include "covset/construct.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "covset/arith.hpp"
#include "covset/error.hpp"

namespace covset {

namespace {

std::uint64_t checked_power(std::uint64_t p, unsigned ell) {
  std::uint64_t v = 1;
  for (unsigned i = 0; i < ell; ++i) {
    v *= p;
    if (v >= kModulusCap) {
      throw Error(ErrorCode::out_of_range,
                  std::to_string(p) + "^" + std::to_string(ell) +
                      " exceeds the modulus cap 2^31");
    }
  }
  return v;
}

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::invalid_argument,
                std::to_string(p) + " is not prime");
  }
}

// {s0 + s1*stride : s0 in offsets, 0 <= s1 < count}.
std::vector<Residue> expand(const std::vector<std::uint64_t>& offsets,
                            std::uint64_t stride, std::uint64_t count) {
  std::vector<Residue> out;
  out.reserve(offsets.size() * count);
  for (std::uint64_t s1 = 0; s1 < count; ++s1) {
    for (std::uint64_t s0 : offsets) {
      out.push_back(static_cast<Residue>(s0 + s1 * stride));
    }
  }
  return out;
}

CoveringSet trivial_pair(std::uint64_t q) {
  if (q == 1) return CoveringSet(1, {0}, Method::trivial_pair);
  return CoveringSet(q, {0, 1}, Method::trivial_pair);
}

// A (lambda, 0; q) covering set, 1 <= lambda < q.
CoveringSet construct_nonnegative(std::uint64_t q, std::uint64_t lambda) {
  if (lambda + 1 >= q) return trivial_pair(q);
  const Factorization f = factorize(q);
  if (f.factors.size() == 1) {
    return construct_prime_power(f.factors[0].prime, f.factors[0].exponent,
                                 lambda);
  }
  const PrimePower smallest = f.factors.back();
  const std::uint64_t q_tilde = q / smallest.value();
  if (lambda < q_tilde) {
    const CoveringSet base = construct_nonnegative(q_tilde, lambda);
    return lift_small_lambda(q_tilde, smallest.prime, smallest.exponent, base,
                             lambda);
  }
  return composite_large_lambda(q_tilde, smallest.prime, smallest.exponent);
}

}  // namespace

unsigned floor_log(std::uint64_t n, std::uint64_t p) {
  if (n == 0 || p < 2) {
    throw Error(ErrorCode::invalid_argument, "floor_log needs n >= 1, p >= 2");
  }
  unsigned i = 0;
  std::uint64_t power = p;
  while (power <= n) {
    ++i;
    power *= p;
  }
  return i;
}

CoveringSet construct_prime_case(std::uint64_t p, unsigned ell,
                                 std::uint64_t lambda) {
  require_prime(p);
  if (ell == 0) throw Error(ErrorCode::invalid_argument, "exponent must be >= 1");
  if (lambda == 0 || lambda >= p) {
    throw Error(ErrorCode::invalid_argument,
                "prime case needs 1 <= lambda < p (lambda=" +
                    std::to_string(lambda) + ", p=" + std::to_string(p) + ")");
  }
  const std::uint64_t q = checked_power(p, ell);
  const std::uint64_t h = (p + lambda - 1) / lambda - 1;
  std::vector<std::uint64_t> offsets{0};
  for (std::uint64_t j = 1; j <= h; ++j) {
    const std::uint64_t inv = mod_inv(j, p);
    offsets.push_back(inv);
    offsets.push_back(p - inv);
  }
  return CoveringSet(q, expand(offsets, p, q / p), Method::prime_inverse);
}

CoveringSet construct_prime_power_large(std::uint64_t p, unsigned ell,
                                        std::uint64_t lambda) {
  require_prime(p);
  const std::uint64_t q = checked_power(p, ell);
  if (lambda < p || lambda >= q) {
    throw Error(ErrorCode::invalid_argument,
                "large-lambda prime-power case needs p <= lambda < p^l");
  }
  const unsigned j = floor_log(lambda, p);
  std::vector<std::uint64_t> offsets{0};
  std::uint64_t pi = 1;
  for (unsigned i = 0; i < j; ++i) {
    offsets.push_back(pi);
    pi *= p;
  }
  // pi == p^j here.
  return CoveringSet(q, expand(offsets, pi, q / pi), Method::prime_power_large);
}

CoveringSet construct_prime_power(std::uint64_t p, unsigned ell,
                                  std::uint64_t lambda) {
  if (lambda < p) return construct_prime_case(p, ell, lambda);
  return construct_prime_power_large(p, ell, lambda);
}

CoveringSet lift_small_lambda(std::uint64_t q_tilde, std::uint64_t p,
                              unsigned ell, const CoveringSet& base,
                              std::uint64_t lambda) {
  require_prime(p);
  if (q_tilde < 2 || gcd(q_tilde, p) != 1) {
    throw Error(ErrorCode::invalid_argument,
                "lift needs q~ >= 2 coprime to p");
  }
  if (base.q() != q_tilde) {
    throw Error(ErrorCode::modulus_mismatch, "base set is not over Z_q~");
  }
  if (lambda == 0 || lambda >= q_tilde) {
    throw Error(ErrorCode::invalid_argument, "lift needs 1 <= lambda < q~");
  }
  if (!verify(ErrorSpec(q_tilde, lambda, 0), base).is_covering) {
    throw Error(ErrorCode::invalid_argument,
                "base set is not a (lambda, 0; q~) covering set");
  }
  const std::uint64_t pl = checked_power(p, ell);
  if (q_tilde * pl >= kModulusCap) {
    throw Error(ErrorCode::out_of_range, "q~ p^l exceeds the modulus cap");
  }

  const unsigned top = floor_log(q_tilde, p);
  std::vector<bool> seen(q_tilde, false);
  std::vector<std::uint64_t> closed;
  std::uint64_t pi = 1;
  for (unsigned i = 0; i <= top; ++i) {
    for (Residue s0 : base.elements()) {
      const std::uint64_t s1 = mod_mul(pi, s0, q_tilde);
      if (!seen[s1]) {
        seen[s1] = true;
        closed.push_back(s1);
      }
    }
    pi = mod_mul(pi, p, q_tilde);
  }
  return CoveringSet(q_tilde * pl, expand(closed, q_tilde, pl),
                     Method::composite_small_lambda);
}

CoveringSet composite_large_lambda(std::uint64_t q_tilde, std::uint64_t p,
                                   unsigned ell) {
  require_prime(p);
  if (q_tilde < 2 || gcd(q_tilde, p) != 1) {
    throw Error(ErrorCode::invalid_argument,
                "composite case needs q~ >= 2 coprime to p");
  }
  const std::uint64_t pl = checked_power(p, ell);
  if (q_tilde * pl >= kModulusCap) {
    throw Error(ErrorCode::out_of_range, "q~ p^l exceeds the modulus cap");
  }
  std::vector<std::uint64_t> offsets{0};
  const unsigned top = floor_log(q_tilde, p);
  std::uint64_t pi = 1;
  for (unsigned i = 0; i <= top; ++i) {
    offsets.push_back(pi);  // p^i < q~ since gcd(q~, p) == 1
    pi *= p;
  }
  return CoveringSet(q_tilde * pl, expand(offsets, q_tilde, pl),
                     Method::composite_large_lambda);
}

CoveringSet construct_general(const ErrorSpec& spec) {
  if (spec.weight() + 1 >= spec.q()) return trivial_pair(spec.q());
  if (spec.mu() > spec.lambda()) return negate_set(construct_general(spec.swapped()));
  return construct_nonnegative(spec.q(), spec.lambda());
}

std::uint64_t default_interval_len(const ErrorSpec& spec) {
  const unsigned __int128 q = spec.q();
  const unsigned __int128 m = std::max(spec.lambda(), spec.mu());
  // Smallest L with L^2 * m >= q^2.
  auto guess = static_cast<std::uint64_t>(
      std::ceil(static_cast<long double>(spec.q()) /
                std::sqrt(static_cast<long double>(m))));
  while (guess > 0 && static_cast<unsigned __int128>(guess - 1) * (guess - 1) * m >= q * q) {
    --guess;
  }
  while (static_cast<unsigned __int128>(guess) * guess * m < q * q) ++guess;
  return guess;
}

IntervalResidual interval_plus_residual(const ErrorSpec& spec,
                                        std::uint64_t interval_len) {
  if (interval_len == 0) {
    throw Error(ErrorCode::invalid_argument, "interval length must be >= 1");
  }
  if (spec.mu() > spec.lambda()) {
    IntervalResidual r = interval_plus_residual(spec.swapped(), interval_len);
    r.set = negate_set(r.set);
    return r;
  }
  const std::uint64_t q = spec.q();
  if (q == 1) {
    return {CoveringSet(1, {0}, Method::interval_residual), 0, 0, 1};
  }
  const std::uint64_t len = std::min(interval_len, q - 1);
  std::vector<Residue> elements;
  elements.reserve(len);
  for (std::uint64_t s = 1; s <= len; ++s) elements.push_back(static_cast<Residue>(s));
  const auto mask =
      product_mask(spec, CoveringSet(q, elements, Method::interval_residual));
  std::uint64_t residual = 0;
  for (std::uint64_t r = 0; r < q; ++r) {
    if (!mask[r]) {
      elements.push_back(static_cast<Residue>(r));
      ++residual;
    }
  }
  return {CoveringSet(q, std::move(elements), Method::interval_residual), len,
          len, residual};
}

}  // namespace covset
