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

#include "covset/search.hpp"

#include "covset/arith.hpp"
#include "covset/construct.hpp"
#include "covset/cover.hpp"
#include "covset/error.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace covset;

namespace {

using Elems = std::vector<Residue>;

Elems elems(const CoveringSet& s) { return {s.elements().begin(), s.elements().end()}; }

// Specs with q <= max_q and lambda + mu <= max_w.
template <typename F>
void for_small_specs(std::uint64_t max_q, std::uint64_t max_w, F&& f) {
  for (std::uint64_t q = 2; q <= max_q; ++q) {
    for (std::uint64_t lambda = 0; lambda < q; ++lambda) {
      for (std::uint64_t mu = 0; mu < q; ++mu) {
        if (lambda + mu == 0 || lambda + mu > max_w) continue;
        f(ErrorSpec(q, lambda, mu));
      }
    }
  }
}

}  // namespace

TEST_CASE("SearchLimits validation") {
  SearchLimits l;
  CHECK_NOTHROW(l.validate());
  l.max_q = 0;
  CHECK_THROWS_AS(l.validate(), Error);
  l = {};
  l.time_budget_seconds = -1.0;
  CHECK_THROWS_AS(l.validate(), Error);
}

TEST_CASE("omega_exact examples") {
  const auto a = omega_exact(ErrorSpec(5, 1, 1));
  CHECK(a.value == 3);
  CHECK(a.lower_bound == 3);
  CHECK(a.exact);

  const auto b = omega_exact(ErrorSpec(10, 2, 1));
  CHECK(b.value == 4);
  CHECK(b.value == (3 * 10 + 2) / 8);

  const auto c = omega_exact(ErrorSpec(2, 1, 0));
  CHECK(c.value == 2);
  CHECK(elems(c.witness) == Elems{0, 1});
}

TEST_CASE("omega_exact frozen values") {
  CHECK(omega_exact(ErrorSpec(7, 3, 0)).value == 3);
  CHECK(omega_exact(ErrorSpec(12, 2, 2)).value == 5);
  CHECK(omega_exact(ErrorSpec(13, 2, 1)).value == 7);
  CHECK(omega_exact(ErrorSpec(1, 1, 0)).value == 1);
}

TEST_CASE("omega_exact respects max_q") {
  CHECK_THROWS_AS(omega_exact(ErrorSpec(65, 1, 0)), Error);
  SearchLimits l;
  l.max_q = 100;
  CHECK(omega_exact(ErrorSpec(65, 64, 0), l).value == 2);
}

TEST_CASE("omega_exact budget exhaustion reports an upper bound") {
  SearchLimits l;
  l.node_budget = 1;
  const ErrorSpec spec(61, 3, 1);
  const auto r = omega_exact(spec, l);
  CHECK_FALSE(r.exact);
  CHECK(verify(spec, r.witness).is_covering);
  CHECK(r.witness.size() == r.value);
  CHECK(r.value >= r.lower_bound);
}

TEST_CASE("omega_greedy examples") {
  CHECK(omega_greedy(ErrorSpec(5, 1, 1)).value == 3);
  CHECK(omega_greedy(ErrorSpec(7, 3, 0)).value >= 3);
  CHECK_FALSE(omega_greedy(ErrorSpec(5, 1, 1)).exact);
}

TEST_CASE("omega_exact agrees with the subset oracle") {
  for_small_specs(14, 4, [](const ErrorSpec& spec) {
    const auto r = omega_exact(spec);
    REQUIRE_MESSAGE(r.value == oracle::omega(spec.q(), spec.lambda(), spec.mu()),
                    "q=" << spec.q() << " lambda=" << spec.lambda() << " mu=" << spec.mu());
    CHECK(r.exact);
  });
}

TEST_CASE("symmetry, sandwich and witness validity") {
  for_small_specs(36, 6, [](const ErrorSpec& spec) {
    const auto r = omega_exact(spec);
    REQUIRE(r.exact);
    const auto g = omega_greedy(spec);
    const auto c = construct_general(spec);
    CHECK(r.lower_bound == covering_lower_bound(spec));
    CHECK(r.lower_bound <= r.value);
    CHECK(r.value <= g.value);
    CHECK(g.value <= c.size());
    CHECK(verify(spec, r.witness).is_covering);
    CHECK(r.witness.size() == r.value);
    CHECK(verify(spec, g.witness).is_covering);
    CHECK(g.witness.size() == g.value);
    CHECK(omega_exact(spec.swapped()).value == r.value);
  });
}

TEST_CASE("omega_exact is deterministic") {
  const ErrorSpec spec(40, 3, 1);
  CHECK(omega_exact(spec).witness == omega_exact(spec).witness);
}

TEST_CASE("nu_exact examples and frozen values") {
  const ErrorSpec a(5, 1, 1);
  CHECK(nu_exact(a, 1) == 2);
  CHECK(nu_exact(a, 3) == 5);
  const std::vector<std::uint64_t> nu5{2, 4, 5, 5, 5};
  for (std::uint64_t r = 1; r <= 5; ++r) CHECK(nu_exact(a, r) == nu5[r - 1]);
  const ErrorSpec b(10, 2, 1);
  const std::vector<std::uint64_t> nu10{3, 6, 8, 10};
  for (std::uint64_t r = 1; r <= 4; ++r) CHECK(nu_exact(b, r) == nu10[r - 1]);
}

TEST_CASE("nu_exact caps") {
  CHECK_THROWS_AS(nu_exact(ErrorSpec(10, 2, 1), 0), Error);
  CHECK_THROWS_AS(nu_exact(ErrorSpec(10, 2, 1), 7), Error);
  CHECK_THROWS_AS(nu_exact(ErrorSpec(5, 1, 1), 6), Error);
  CHECK_THROWS_AS(nu_exact(ErrorSpec(65, 2, 1), 2), Error);
}

TEST_CASE("nu_exact agrees with the oracle, is monotone and bounded") {
  for_small_specs(11, 4, [](const ErrorSpec& spec) {
    std::uint64_t prev = 0;
    const std::uint64_t w = spec.weight();
    for (std::uint64_t r = 1; r <= std::min<std::uint64_t>(spec.q(), 4); ++r) {
      const auto v = nu_exact(spec, r);
      REQUIRE(v == oracle::nu(spec.q(), spec.lambda(), spec.mu(), r));
      CHECK(v >= prev);
      // M has w distinct residues only when w < q.
      CHECK(v >= (w < spec.q() ? std::max(r, w) : r));
      CHECK(v <= std::min(w * r, spec.q()));
      prev = v;
    }
  });
}

TEST_CASE("nu and omega are consistent") {
  for_small_specs(24, 5, [](const ErrorSpec& spec) {
    const auto w = omega_exact(spec).value;
    if (w > 6) return;
    CHECK(nu_exact(spec, w) == spec.q());
    if (w > 1) CHECK(nu_exact(spec, w - 1) < spec.q());
  });
}

TEST_CASE("theta_exact examples and frozen values") {
  const auto a = theta_exact(ErrorSpec(5, 1, 1));
  CHECK(a.value == 2);
  CHECK(verify(ErrorSpec(5, 1, 1), a.witness).is_packing);
  CHECK(a.witness.size() == 2);
  CHECK(theta_exact(ErrorSpec(10, 2, 1)).value == 2);
  CHECK(theta_exact(ErrorSpec(12, 2, 0)).value == 4);
  CHECK(theta_exact(ErrorSpec(13, 3, 1)).value == 1);
  CHECK_THROWS_AS(theta_exact(ErrorSpec(65, 1, 1)), Error);
}

TEST_CASE("theta_exact agrees with the oracle and the counting bound") {
  for_small_specs(14, 4, [](const ErrorSpec& spec) {
    const auto t = theta_exact(spec);
    REQUIRE(t.value == oracle::theta(spec.q(), spec.lambda(), spec.mu()));
    CHECK(t.value <= spec.q() / spec.weight());
    CHECK(t.witness.size() == t.value);
    if (t.value > 0) CHECK(verify(spec, t.witness).is_packing);
  });
}

TEST_CASE("delta_run examples") {
  const auto a = delta_run(2, ErrorSpec(13, 8, 0));
  CHECK(a.delta == 7);
  CHECK(a.implied_bound == 3);
  const auto b = delta_run(2, ErrorSpec(5, 4, 0));
  CHECK(b.delta == 4);
  CHECK(b.implied_bound == 2);
  const auto c = delta_run(3, ErrorSpec(7, 1, 1));
  CHECK(c.delta == 1);
  CHECK(c.implied_bound == 7);
}

TEST_CASE("delta_run errors") {
  CHECK_THROWS_AS(delta_run(2, ErrorSpec(7, 3, 0)), Error);   // 2 is not a primitive root mod 7
  CHECK_THROWS_AS(delta_run(2, ErrorSpec(9, 3, 0)), Error);   // not prime
  CHECK_THROWS_AS(delta_run(1, ErrorSpec(2, 1, 0)), Error);   // p = 2
}

TEST_CASE("delta_run agrees with the oracle and bounds omega") {
  for (std::uint64_t p : sieve_primes(61)) {
    if (p == 2) continue;
    const std::uint64_t g = primitive_root(p);
    for (std::uint64_t lambda = 0; lambda < p; ++lambda) {
      for (std::uint64_t mu = 0; mu < p && mu <= 3; ++mu) {
        if (lambda + mu == 0) continue;
        const ErrorSpec spec(p, lambda, mu);
        const auto d = delta_run(g, spec);
        REQUIRE(d.delta == oracle::delta(p, g, lambda, mu));
        if (p <= 43 && lambda + mu <= 5) CHECK(omega_exact(spec).value <= d.implied_bound);
      }
    }
  }
}
