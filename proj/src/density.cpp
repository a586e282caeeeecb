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

#include "covset/density.hpp"

#include <cmath>
#include <string>

#include "covset/arith.hpp"
#include "covset/error.hpp"

namespace covset {

namespace {

void check_thresholds(std::span<const std::uint64_t> xs, std::uint64_t min,
                      const char* what) {
  std::uint64_t prev = 0;
  for (auto x : xs) {
    if (x < min) {
      throw Error(ErrorCode::out_of_range,
                  std::string(what) + " thresholds must be >= " +
                      std::to_string(min) + ", got " + std::to_string(x));
    }
    if (x >= kModulusCap) {
      throw Error(ErrorCode::out_of_range, "thresholds must be below 2^31");
    }
    if (x < prev) {
      throw Error(ErrorCode::invalid_argument, "thresholds must be ascending");
    }
    prev = x;
  }
}

// 4 | ord_p(2) using the SPF table to factor p - 1.
bool order_of_two_divisible_by_4(std::uint64_t p, const SpfTable& spf) {
  // ord_p(2) | p - 1, so p == 3 (mod 4) can never qualify.
  if (p % 4 != 1) return false;
  return multiplicative_order(2, p, spf.factorize(p - 1)) % 4 == 0;
}

DensityRecord make_record(std::uint64_t threshold, std::uint64_t count,
                          double normalizer) {
  return {threshold, count, normalizer, static_cast<double>(count) / normalizer,
          std::nullopt};
}

double n_normalizer(std::uint64_t q) {
  const double x = static_cast<double>(q);
  return x / std::pow(std::log(x), 2.0 / 3.0);
}

}  // namespace

bool ell_p_divisible_by_4(std::uint64_t p) {
  if (p < 3 || !is_prime(p)) {
    throw Error(ErrorCode::invalid_argument,
                std::to_string(p) + " is not an odd prime");
  }
  return multiplicative_order(2, p) % 4 == 0;
}

std::vector<DensityRecord> count_q4(std::span<const std::uint64_t> xs) {
  check_thresholds(xs, 3, "Q4");
  std::vector<DensityRecord> out;
  if (xs.empty()) return out;
  const SpfTable spf(xs.back());
  std::uint64_t primes = 0, count = 0;
  std::size_t next = 0;
  for (std::uint64_t n = 2; next < xs.size(); ++n) {
    if (n <= spf.limit() && spf.is_prime(n)) {
      ++primes;
      if (n > 2 && order_of_two_divisible_by_4(n, spf)) ++count;
    }
    while (next < xs.size() && xs[next] == n) {
      out.push_back(make_record(n, count, static_cast<double>(primes)));
      ++next;
    }
  }
  return out;
}

DensityRecord count_q4(std::uint64_t x) {
  const std::uint64_t xs[] = {x};
  return count_q4(xs).front();
}

bool is_eligible_q(std::uint64_t q) {
  if (q % 4 != 2 || q == 2) return false;
  for (const auto& pp : factorize(q / 2).factors) {
    if (!ell_p_divisible_by_4(pp.prime)) return false;
  }
  return true;
}

std::vector<DensityRecord> count_n(std::span<const std::uint64_t> thresholds) {
  check_thresholds(thresholds, 2, "N");
  std::vector<DensityRecord> out;
  if (thresholds.empty()) return out;
  const std::uint64_t top = thresholds.back();
  const std::uint64_t half = top / 2;
  const SpfTable spf(std::max<std::uint64_t>(half, 2));

  // good[p] for odd primes p <= Q/2; composite entries unused.
  std::vector<bool> good(half + 1, false);
  for (std::uint64_t p = 3; p <= half; p += 2) {
    if (spf.is_prime(p)) good[p] = order_of_two_divisible_by_4(p, spf);
  }

  std::uint64_t count = 0;
  std::size_t next = 0;
  for (std::uint64_t q = 1; next < thresholds.size(); ++q) {
    if (q % 4 == 2 && q > 2) {
      std::uint64_t m = q / 2;
      bool eligible = true;
      while (m > 1 && eligible) {
        const std::uint64_t p = spf[m];
        eligible = good[p];
        while (m % p == 0) m /= p;
      }
      count += eligible;
    }
    while (next < thresholds.size() && thresholds[next] == q) {
      out.push_back(make_record(q, count, n_normalizer(q)));
      ++next;
    }
  }
  return out;
}

DensityRecord count_n(std::uint64_t threshold) {
  const std::uint64_t qs[] = {threshold};
  return count_n(qs).front();
}

std::optional<std::uint64_t> omega21_formula(std::uint64_t q) {
  if (!is_eligible_q(q)) return std::nullopt;
  if (q % 8 != 2) {
    throw Error(ErrorCode::invalid_argument,
                "eligible q = " + std::to_string(q) + " is not 2 mod 8");
  }
  return (3 * q + 2) / 8;
}

std::vector<DensityRecord> mertens_sweep(std::span<const std::uint64_t> xs) {
  check_thresholds(xs, 5, "Mertens");
  std::vector<DensityRecord> out;
  if (xs.empty()) return out;
  const SpfTable spf(xs.back());
  double product = 1.0;
  std::uint64_t count = 0;
  std::size_t next = 0;
  for (std::uint64_t n = 3; next < xs.size(); ++n) {
    if (spf.is_prime(n) && order_of_two_divisible_by_4(n, spf)) {
      product *= 1.0 + 1.0 / static_cast<double>(n - 1);
      ++count;
    }
    while (next < xs.size() && xs[next] == n) {
      const double norm = std::cbrt(std::log(static_cast<double>(n)));
      out.push_back({n, count, norm, product / norm, product});
      ++next;
    }
  }
  return out;
}

MertensEstimate mertens_product(std::uint64_t x) {
  const std::uint64_t xs[] = {x};
  const auto row = mertens_sweep(xs).front();
  return {*row.product, row.ratio};
}

std::vector<DensityRecord> estimate_rho(std::span<const std::uint64_t> thresholds) {
  return count_n(thresholds);
}

}  // namespace covset
