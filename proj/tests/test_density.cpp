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

#include "covset/arith.hpp"
#include "covset/error.hpp"
#include "covset/search.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace covset;

TEST_CASE("ell_p_divisible_by_4 examples") {
  CHECK(ell_p_divisible_by_4(5));
  CHECK_FALSE(ell_p_divisible_by_4(7));
  CHECK(ell_p_divisible_by_4(29));
  CHECK_THROWS_AS(ell_p_divisible_by_4(2), Error);
  CHECK_THROWS_AS(ell_p_divisible_by_4(9), Error);
}

TEST_CASE("ell_p_divisible_by_4 matches the powering oracle") {
  for (std::uint64_t p = 3; p < 3000; p += 2) {
    if (!oracle::prime(p)) continue;
    REQUIRE(ell_p_divisible_by_4(p) == (oracle::order(2, p) % 4 == 0));
  }
}

TEST_CASE("count_q4 examples") {
  const auto a = count_q4(30);
  CHECK(a.count == 4);
  CHECK(a.normalizer == doctest::Approx(10.0));
  CHECK(a.ratio == doctest::Approx(0.4));
  CHECK(count_q4(3).count == 0);
  CHECK_THROWS_AS(count_q4(2), Error);
}

TEST_CASE("count_q4 agrees with a per-prime classification") {
  std::vector<std::uint64_t> xs;
  for (std::uint64_t x = 3; x <= 5000; x += 7) xs.push_back(x);
  const auto rows = count_q4(xs);
  const auto primes = sieve_primes(5000);
  std::uint64_t prev = 0;
  for (const auto& row : rows) {
    std::uint64_t count = 0, pi = 0;
    for (auto p : primes) {
      if (p > row.threshold) break;
      ++pi;
      if (p > 2 && ell_p_divisible_by_4(p)) ++count;
    }
    REQUIRE(row.count == count);
    CHECK(row.normalizer == static_cast<double>(pi));
    CHECK(row.ratio == static_cast<double>(count) / static_cast<double>(pi));
    CHECK(row.count >= prev);
    prev = row.count;
  }
}

TEST_CASE("is_eligible_q examples") {
  CHECK(is_eligible_q(10));
  CHECK_FALSE(is_eligible_q(6));
  CHECK_FALSE(is_eligible_q(4));
  CHECK_FALSE(is_eligible_q(2));
  CHECK(is_eligible_q(26));
}

TEST_CASE("is_eligible_q matches the oracle") {
  for (std::uint64_t q = 1; q <= 4000; ++q) REQUIRE(is_eligible_q(q) == oracle::eligible(q));
}

TEST_CASE("count_n small thresholds") {
  CHECK(count_n(10).count == 1);
  CHECK(count_n(2).count == 0);
  CHECK_THROWS_AS(count_n(1), Error);
  const auto r = count_n(40002);
  CHECK(r.count == 1745);
  CHECK(r.normalizer == doctest::Approx(40002.0 / std::pow(std::log(40002.0), 2.0 / 3.0)));
  CHECK(r.ratio == doctest::Approx(1745.0 * std::pow(std::log(40002.0), 2.0 / 3.0) / 40002.0));
}

TEST_CASE("count_n sweep agrees with per-q eligibility and is monotone") {
  std::vector<std::uint64_t> qs;
  for (std::uint64_t q = 2; q <= 6000; q += 13) qs.push_back(q);
  const auto rows = count_n(qs);
  REQUIRE(rows.size() == qs.size());
  std::uint64_t q = 1, count = 0, prev = 0;
  for (const auto& row : rows) {
    for (; q <= row.threshold; ++q) {
      if (is_eligible_q(q)) {
        ++count;
        CHECK(q % 8 == 2);
      }
    }
    REQUIRE(row.count == count);
    CHECK(row.count >= prev);
    prev = row.count;
  }
  CHECK(estimate_rho(qs).back().count == rows.back().count);
}

TEST_CASE("thresholds must be ascending") {
  const std::uint64_t xs[] = {100, 50};
  CHECK_THROWS_AS(count_q4(xs), Error);
  CHECK_THROWS_AS(count_n(xs), Error);
  CHECK(count_n(std::span<const std::uint64_t>{}).empty());
}

TEST_CASE("omega21_formula examples") {
  CHECK(omega21_formula(10) == 4u);
  CHECK(omega21_formula(26) == 10u);
  CHECK_FALSE(omega21_formula(6).has_value());
  CHECK_FALSE(omega21_formula(2).has_value());
}

TEST_CASE("omega21_formula matches exact search for eligible q within the cap") {
  for (std::uint64_t q = 3; q <= 22; ++q) {
    if (!is_eligible_q(q)) continue;
    CHECK(*omega21_formula(q) == omega_exact(ErrorSpec(q, 2, 1)).value);
  }
}

TEST_CASE("mertens_product examples") {
  const auto a = mertens_product(30);
  CHECK(a.product == doctest::Approx(5.0 / 4 * 13.0 / 12 * 17.0 / 16 * 29.0 / 28));
  CHECK(a.product == doctest::Approx(1.4902).epsilon(1e-4));
  CHECK(a.eta_estimate == doctest::Approx(a.product / std::cbrt(std::log(30.0))));
  CHECK(mertens_product(5).product == doctest::Approx(1.25));
  CHECK_THROWS_AS(mertens_product(4), Error);
}

TEST_CASE("mertens_product grows exactly at qualifying primes") {
  double prev = mertens_product(5).product;
  for (std::uint64_t x = 6; x <= 400; ++x) {
    const double cur = mertens_product(x).product;
    if (oracle::prime(x) && oracle::order(2, x) % 4 == 0) {
      CHECK(cur > prev);
    } else {
      CHECK(cur == prev);
    }
    prev = cur;
  }
}
