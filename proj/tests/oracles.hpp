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

// Brute-force reference implementations for the test suites. Nothing here
// calls into the library; each routine is the slowest obvious definition.

#ifndef COVSET_TESTS_ORACLES_HPP
#define COVSET_TESTS_ORACLES_HPP

#include <cstdint>
#include <map>
#include <set>
#include <vector>

namespace oracle {

inline std::map<std::uint64_t, unsigned> factor(std::uint64_t n) {
  std::map<std::uint64_t, unsigned> out;
  for (std::uint64_t d = 2; d <= n; ++d) {
    while (n % d == 0) {
      ++out[d];
      n /= d;
    }
  }
  return out;
}

inline bool prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d < n && d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// Least t with a^t == 1 (mod m) by stepping through powers; 0 if none.
inline std::uint64_t order(std::uint64_t a, std::uint64_t m) {
  std::uint64_t x = a % m;
  for (std::uint64_t t = 1; t <= m; ++t) {
    if (x == 1 % m) return t;
    x = x * a % m;
  }
  return 0;
}

inline std::vector<std::int64_t> magnitudes(std::int64_t lambda, std::int64_t mu) {
  std::vector<std::int64_t> m;
  for (std::int64_t v = -mu; v <= lambda; ++v) {
    if (v != 0) m.push_back(v);
  }
  return m;
}

inline std::set<std::uint64_t> products(std::uint64_t q, std::int64_t lambda,
                                        std::int64_t mu,
                                        const std::vector<std::uint64_t>& s) {
  std::set<std::uint64_t> out;
  const auto qi = static_cast<std::int64_t>(q);
  for (auto m : magnitudes(lambda, mu)) {
    for (auto e : s) {
      out.insert(static_cast<std::uint64_t>(((m * static_cast<std::int64_t>(e)) % qi + qi) % qi));
    }
  }
  return out;
}

// Calls visit(subset) for every r-subset of [0, q) in lexicographic order;
// stops early when visit returns true.
template <typename F>
bool each_subset(std::uint64_t q, std::uint64_t r, F&& visit) {
  std::vector<std::uint64_t> idx(r);
  for (std::uint64_t i = 0; i < r; ++i) idx[i] = i;
  if (r > q) return false;
  while (true) {
    if (visit(idx)) return true;
    std::int64_t i = static_cast<std::int64_t>(r) - 1;
    while (i >= 0 && idx[i] == q - r + static_cast<std::uint64_t>(i)) --i;
    if (i < 0) return false;
    ++idx[i];
    for (std::uint64_t j = i + 1; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

inline std::uint64_t omega(std::uint64_t q, std::int64_t lambda, std::int64_t mu) {
  for (std::uint64_t r = 1; r <= q; ++r) {
    const bool found = each_subset(q, r, [&](const std::vector<std::uint64_t>& s) {
      return products(q, lambda, mu, s).size() == q;
    });
    if (found) return r;
  }
  return 0;
}

inline std::uint64_t nu(std::uint64_t q, std::int64_t lambda, std::int64_t mu,
                        std::uint64_t r) {
  std::uint64_t best = 0;
  each_subset(q, r, [&](const std::vector<std::uint64_t>& s) {
    best = std::max<std::uint64_t>(best, products(q, lambda, mu, s).size());
    return false;
  });
  return best;
}

inline std::uint64_t theta(std::uint64_t q, std::int64_t lambda, std::int64_t mu) {
  const std::uint64_t w = static_cast<std::uint64_t>(lambda + mu);
  std::uint64_t best = 0;
  for (std::uint64_t r = 1; r * w <= q; ++r) {
    const bool found = each_subset(q, r, [&](const std::vector<std::uint64_t>& s) {
      return products(q, lambda, mu, s).size() == w * r;
    });
    if (!found) break;
    best = r;
  }
  return best;
}

// Longest cyclic run of consecutive exponents with g^n mod p in M.
inline std::uint64_t delta(std::uint64_t p, std::uint64_t g, std::int64_t lambda,
                           std::int64_t mu) {
  const std::uint64_t period = p - 1;
  std::vector<bool> hit;
  std::uint64_t x = 1;
  for (std::uint64_t n = 0; n < period; ++n) {
    const auto xi = static_cast<std::int64_t>(x);
    hit.push_back(xi <= lambda || xi - static_cast<std::int64_t>(p) >= -mu);
    x = x * g % p;
  }
  std::uint64_t best = 0;
  for (std::uint64_t start = 0; start < period; ++start) {
    std::uint64_t len = 0;
    while (len < period && hit[(start + len) % period]) ++len;
    best = std::max(best, len);
  }
  return best;
}

inline bool eligible(std::uint64_t q) {
  if (q % 4 != 2 || q == 2) return false;
  for (const auto& [p, e] : factor(q)) {
    if (p != 2 && order(2, p) % 4 != 0) return false;
  }
  return true;
}

}  // namespace oracle

#endif  // COVSET_TESTS_ORACLES_HPP
