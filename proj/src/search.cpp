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

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <queue>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "covset/arith.hpp"
#include "covset/error.hpp"

namespace covset {

namespace {

class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : words_((n + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  std::size_t count_and(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) c += std::popcount(words_[i] & o.words_[i]);
    return c;
  }
  bool intersects(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & o.words_[i]) return true;
    }
    return false;
  }
  bool subset_of(const Bits& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~o.words_[i]) return false;
    }
    return true;
  }
  bool none() const {
    for (auto w : words_) {
      if (w) return false;
    }
    return true;
  }
  void subtract(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  }
  void intersect(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  }
  void unite(const Bits& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  }
  void fill(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) set(i);
  }

  const std::vector<std::uint64_t>& words() const { return words_; }

  // Calls f(i) for every set bit i in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      for (std::uint64_t w = words_[k]; w != 0; w &= w - 1) {
        f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      }
    }
  }

  friend bool operator==(const Bits&, const Bits&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

// The residues m*s mod q for m in M, in magnitude order (may repeat).
std::vector<std::uint64_t> products_of(const ErrorSpec& spec, std::uint64_t s) {
  const std::uint64_t q = spec.q();
  std::vector<std::uint64_t> out;
  out.reserve(spec.weight());
  std::uint64_t r = 0;
  for (std::uint64_t m = 1; m <= spec.lambda(); ++m) {
    r += s;
    if (r >= q) r -= q;
    out.push_back(r);
  }
  const std::uint64_t neg = (q - s) % q;
  r = 0;
  for (std::uint64_t m = 1; m <= spec.mu(); ++m) {
    r += neg;
    if (r >= q) r -= q;
    out.push_back(r);
  }
  return out;
}

std::vector<Bits> candidate_masks(const ErrorSpec& spec) {
  std::vector<Bits> masks;
  masks.reserve(spec.q());
  for (std::uint64_t s = 0; s < spec.q(); ++s) {
    Bits b(spec.q());
    for (auto r : products_of(spec, s)) b.set(r);
    masks.push_back(std::move(b));
  }
  return masks;
}

void require_within(const ErrorSpec& spec, const SearchLimits& limits) {
  limits.validate();
  if (spec.q() > limits.max_q) {
    throw Error(ErrorCode::limit_exceeded,
                "q = " + std::to_string(spec.q()) +
                    " exceeds the exact-search cap max_q = " +
                    std::to_string(limits.max_q));
  }
}

class Budget {
 public:
  explicit Budget(const SearchLimits& limits)
      : limits_(limits), start_(std::chrono::steady_clock::now()) {}

  // Counts a node; false once the node or time budget is spent.
  bool tick() {
    ++nodes_;
    if (exhausted_) return false;
    if (nodes_ > limits_.node_budget) exhausted_ = true;
    if (limits_.time_budget_seconds && (nodes_ & 1023) == 0) {
      const std::chrono::duration<double> elapsed =
          std::chrono::steady_clock::now() - start_;
      if (elapsed.count() > *limits_.time_budget_seconds) exhausted_ = true;
    }
    return !exhausted_;
  }
  bool exhausted() const { return exhausted_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  const SearchLimits& limits_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t nodes_ = 0;
  bool exhausted_ = false;
};

struct BitsHash {
  std::size_t operator()(const Bits& b) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (auto w : b.words()) h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
    return static_cast<std::size_t>(h);
  }
};

// Exact minimum set cover over Z_q. solve(U, limit) returns the optimum for
// the uncovered residues U when it is below `limit`, and otherwise a lower
// bound that is at least `limit`. Results are memoized on U, and U is split
// into connected components (residues linked by a shared candidate) whose
// optima add up.
class CoverSearch {
 public:
  CoverSearch(const ErrorSpec& spec, const SearchLimits& limits)
      : q_(spec.q()), budget_(limits) {
    auto masks = candidate_masks(spec);
    // Drop candidates whose products are contained in another candidate's;
    // some minimum cover avoids them. Equal sets keep the smaller residue.
    for (std::uint64_t s = 0; s < q_; ++s) {
      bool dominated = false;
      for (std::uint64_t t = 0; t < q_ && !dominated; ++t) {
        if (t == s || !masks[s].subset_of(masks[t])) continue;
        dominated = masks[s] != masks[t] || t < s;
      }
      if (!dominated) {
        residues_.push_back(static_cast<Residue>(s));
        masks_.push_back(masks[s]);
      }
    }
    coverers_.resize(q_);
    for (std::size_t c = 0; c < masks_.size(); ++c) {
      masks_[c].for_each([&](std::size_t e) { coverers_[e].push_back(c); });
    }
    neighbors_.assign(q_, Bits(q_));
    for (std::uint64_t e = 0; e < q_; ++e) {
      for (auto c : coverers_[e]) neighbors_[e].unite(masks_[c]);
    }
  }

  // Searches for a cover smaller than `incumbent`. Returns the optimum when
  // one exists, otherwise a lower bound >= incumbent (so the incumbent is
  // optimal), unless the budget ran out.
  std::uint64_t run(std::uint64_t incumbent) {
    Bits all(q_);
    all.fill(q_);
    const std::uint64_t v = solve(all, incumbent);
    if (!budget_.exhausted() && v < incumbent) rebuild(all, v);
    return v;
  }

  const std::vector<Residue>& witness() const { return witness_; }
  std::uint64_t nodes() const { return budget_.nodes(); }
  bool exhausted() const { return budget_.exhausted(); }

 private:
  struct Entry {
    std::uint64_t value = 0;
    bool exact = false;
  };

  static constexpr std::size_t kMemoCap = std::size_t{1} << 22;

  std::vector<Bits> components(const Bits& uncovered) const {
    std::vector<Bits> out;
    Bits left = uncovered;
    std::vector<std::uint64_t> stack;
    for (std::uint64_t seed = 0; seed < q_; ++seed) {
      if (!left.test(seed)) continue;
      Bits comp(q_);
      comp.set(seed);
      left.reset(seed);
      stack.push_back(seed);
      while (!stack.empty()) {
        const auto e = stack.back();
        stack.pop_back();
        Bits fresh = neighbors_[e];
        fresh.intersect(left);
        fresh.for_each([&](std::size_t f) {
          left.reset(f);
          comp.set(f);
          stack.push_back(f);
        });
      }
      out.push_back(std::move(comp));
    }
    return out;
  }

  // Admissible lower bound for covering `uncovered`.
  std::uint64_t bound(const Bits& uncovered) {
    gains_.assign(masks_.size(), 0);
    // Each chosen candidate c pays 1 / gain(c) for each residue it newly
    // covers, and gain(c) is at most the best gain among that residue's
    // coverers. Summing over residues bounds the count from below.
    double fractional = 0.0;
    // Uncovered residues with pairwise disjoint coverer lists each need
    // their own candidate.
    Bits used(masks_.size());
    std::uint64_t disjoint = 0;
    uncovered.for_each([&](std::size_t e) {
      bool clash = false;
      std::size_t best_gain = 0;
      for (auto c : coverers_[e]) {
        if (gains_[c] == 0) gains_[c] = masks_[c].count_and(uncovered);
        best_gain = std::max(best_gain, gains_[c]);
        clash = clash || used.test(c);
      }
      fractional += 1.0 / static_cast<double>(best_gain);
      if (clash) return;
      ++disjoint;
      for (auto c : coverers_[e]) used.set(c);
    });
    const auto by_fraction = static_cast<std::uint64_t>(std::ceil(fractional - 1e-9));
    return std::max(by_fraction, disjoint);
  }

  void remember(const Bits& u, Entry entry) {
    if (budget_.exhausted()) return;
    auto it = memo_.find(u);
    if (it != memo_.end()) {
      if (entry.exact || entry.value > it->second.value) it->second = entry;
      return;
    }
    if (memo_.size() < kMemoCap) memo_.emplace(u, entry);
  }

  std::uint64_t solve(const Bits& u, std::uint64_t limit) {
    if (u.none()) return 0;
    if (!budget_.tick()) return limit;
    std::uint64_t lb = 0;
    if (auto it = memo_.find(u); it != memo_.end()) {
      if (it->second.exact || it->second.value >= limit) return it->second.value;
      lb = it->second.value;
    }
    lb = std::max(lb, bound(u));
    if (lb >= limit) {
      remember(u, {lb, false});
      return lb;
    }

    auto parts = components(u);
    if (parts.size() > 1) return solve_parts(parts, limit);

    std::uint64_t pivot = q_;
    for (std::uint64_t e = 0; e < q_; ++e) {
      if (u.test(e) && (pivot == q_ || coverers_[e].size() < coverers_[pivot].size())) {
        pivot = e;
      }
    }
    // Larger gains first; ties by residue.
    std::vector<std::pair<std::size_t, std::size_t>> order;
    for (auto c : coverers_[pivot]) order.push_back({masks_[c].count_and(u), c});
    std::sort(order.begin(), order.end(),
              [](const auto& a, const auto& b) {
                return a.first != b.first ? a.first > b.first : a.second < b.second;
              });

    std::uint64_t best = limit;
    std::uint64_t floor = limit;  // min over children of 1 + child bound
    for (const auto& [gain, c] : order) {
      Bits next = u;
      next.subtract(masks_[c]);
      const std::uint64_t v = 1 + solve(next, best - 1);
      if (budget_.exhausted()) return limit;
      if (v < best) {
        best = v;
        if (best <= lb) break;
      } else {
        floor = std::min(floor, v);
      }
    }
    if (best < limit) {
      remember(u, {best, true});
      return best;
    }
    remember(u, {floor, false});
    return floor;
  }

  std::uint64_t solve_parts(const std::vector<Bits>& parts, std::uint64_t limit) {
    std::vector<std::uint64_t> lbs;
    std::uint64_t total = 0;
    for (const auto& p : parts) {
      std::uint64_t lb = bound(p);
      if (auto it = memo_.find(p); it != memo_.end()) lb = std::max(lb, it->second.value);
      lbs.push_back(lb);
      total += lb;
    }
    if (total >= limit) return total;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const std::uint64_t others = total - lbs[i];
      const std::uint64_t v = solve(parts[i], limit - others);
      if (budget_.exhausted()) return limit;
      total = others + v;
      lbs[i] = v;
      if (total >= limit) return total;
    }
    return total;
  }

  // Appends an optimal cover of `u`, whose optimum is `value`, to witness_.
  void rebuild(const Bits& u, std::uint64_t value) {
    if (u.none()) return;
    auto parts = components(u);
    if (parts.size() > 1) {
      for (const auto& p : parts) rebuild(p, solve(p, q_ + 1));
      return;
    }
    std::uint64_t pivot = q_;
    for (std::uint64_t e = 0; e < q_; ++e) {
      if (u.test(e) && (pivot == q_ || coverers_[e].size() < coverers_[pivot].size())) {
        pivot = e;
      }
    }
    for (auto c : coverers_[pivot]) {
      Bits next = u;
      next.subtract(masks_[c]);
      if (solve(next, value) == value - 1) {
        witness_.push_back(residues_[c]);
        rebuild(next, value - 1);
        return;
      }
    }
    throw Error(ErrorCode::invalid_argument, "internal: cover reconstruction failed");
  }

  std::uint64_t q_;
  Budget budget_;
  std::vector<Residue> residues_;
  std::vector<Bits> masks_;
  std::vector<std::vector<std::size_t>> coverers_;
  std::vector<Bits> neighbors_;  // residues sharing a candidate with e
  std::vector<std::size_t> gains_;
  std::unordered_map<Bits, Entry, BitsHash> memo_;
  std::vector<Residue> witness_;
};

}  // namespace

void SearchLimits::validate() const {
  if (max_q == 0 || max_r == 0 || node_budget == 0) {
    throw Error(ErrorCode::invalid_argument, "search caps must be positive");
  }
  if (time_budget_seconds && *time_budget_seconds <= 0) {
    throw Error(ErrorCode::invalid_argument, "time budget must be positive");
  }
}

OmegaResult omega_greedy(const ErrorSpec& spec) {
  const std::uint64_t q = spec.q();
  std::vector<bool> covered(q, false);
  std::uint64_t remaining = q;

  auto gain = [&](std::uint64_t s) {
    auto prods = products_of(spec, s);
    std::sort(prods.begin(), prods.end());
    prods.erase(std::unique(prods.begin(), prods.end()), prods.end());
    std::uint64_t g = 0;
    for (auto r : prods) g += !covered[r];
    return g;
  };

  // Lazy greedy: gains only shrink, so a popped entry whose refreshed gain is
  // unchanged is a true maximum. Order is (gain desc, residue asc).
  using Entry = std::pair<std::uint64_t, std::uint64_t>;
  auto worse = [](const Entry& a, const Entry& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  };
  std::priority_queue<Entry, std::vector<Entry>, decltype(worse)> heap(worse);
  for (std::uint64_t s = 0; s < q; ++s) heap.push({gain(s), s});

  std::vector<Residue> chosen;
  std::uint64_t evaluations = 0;
  while (remaining > 0 && !heap.empty()) {
    auto [stale, s] = heap.top();
    heap.pop();
    const std::uint64_t fresh = gain(s);
    ++evaluations;
    if (fresh == 0) continue;
    if (fresh != stale) {
      heap.push({fresh, s});
      continue;
    }
    chosen.push_back(static_cast<Residue>(s));
    for (auto r : products_of(spec, s)) {
      if (!covered[r]) {
        covered[r] = true;
        --remaining;
      }
    }
  }

  OmegaResult result;
  result.witness = CoveringSet(q, std::move(chosen));
  result.value = result.witness.size();
  result.lower_bound = covering_lower_bound(spec);
  result.nodes_explored = evaluations;
  result.exact = false;
  return result;
}

OmegaResult omega_exact(const ErrorSpec& spec, const SearchLimits& limits) {
  require_within(spec, limits);
  OmegaResult greedy = omega_greedy(spec);
  CoverSearch search(spec, limits);
  const std::uint64_t v = search.run(greedy.value);

  OmegaResult result;
  result.exact = !search.exhausted();
  if (result.exact && v < greedy.value) {
    result.witness = CoveringSet(spec.q(), search.witness());
  } else {
    result.witness = std::move(greedy.witness);
  }
  result.value = result.witness.size();
  result.lower_bound = covering_lower_bound(spec);
  result.nodes_explored = search.nodes();
  return result;
}

std::uint64_t nu_exact(const ErrorSpec& spec, std::uint64_t r,
                       const SearchLimits& limits) {
  require_within(spec, limits);
  if (r == 0 || r > limits.max_r) {
    throw Error(ErrorCode::limit_exceeded,
                "r = " + std::to_string(r) + " must lie in [1, max_r = " +
                    std::to_string(limits.max_r) + "]");
  }
  if (r > spec.q()) {
    throw Error(ErrorCode::invalid_argument, "r exceeds the ring size q");
  }
  const std::uint64_t q = spec.q();
  const auto masks = candidate_masks(spec);
  const std::uint64_t ceiling = std::min(spec.weight() * r, q);
  std::uint64_t best = 0;
  Budget budget(limits);

  // Choose r residues in ascending order.
  auto dfs = [&](auto&& self, std::uint64_t next, std::uint64_t left,
                 const Bits& covered, std::uint64_t count) -> void {
    if (!budget.tick() || best == ceiling) return;
    if (left == 0) {
      best = std::max(best, count);
      return;
    }
    if (std::min(q, count + spec.weight() * left) <= best) return;
    for (std::uint64_t s = next; s + left <= q; ++s) {
      Bits grown = covered;
      grown.unite(masks[s]);
      self(self, s + 1, left - 1, grown, grown.count());
      if (budget.exhausted() || best == ceiling) return;
    }
  };
  dfs(dfs, 0, r, Bits(q), 0);
  if (budget.exhausted()) {
    throw Error(ErrorCode::limit_exceeded, "nu search exhausted its node budget");
  }
  return best;
}

namespace {

// Maximum packing as a maximum independent set: vertices are the candidates
// whose w products are distinct, joined when their product sets meet.
class PackingSearch {
 public:
  PackingSearch(const ErrorSpec& spec, const SearchLimits& limits) : budget_(limits) {
    const auto masks = candidate_masks(spec);
    std::vector<const Bits*> usable;
    for (std::uint64_t s = 0; s < spec.q(); ++s) {
      if (masks[s].count() == spec.weight()) {
        residues_.push_back(static_cast<Residue>(s));
        usable.push_back(&masks[s]);
      }
    }
    n_ = residues_.size();
    conflicts_.assign(n_, Bits(n_));
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (i != j && usable[i]->intersects(*usable[j])) conflicts_[i].set(j);
      }
    }
  }

  std::vector<Residue> run() {
    Bits all(n_);
    all.fill(n_);
    const std::uint64_t v = solve(all);
    std::vector<Residue> out;
    if (!budget_.exhausted()) rebuild(all, v, out);
    return out;
  }

  std::uint64_t nodes() const { return budget_.nodes(); }
  bool exhausted() const { return budget_.exhausted(); }

 private:
  static constexpr std::size_t kMemoCap = std::size_t{1} << 22;

  std::size_t degree(std::size_t v, const Bits& alive) const {
    return conflicts_[v].count_and(alive);
  }

  // Vertex to branch on: maximum degree, ties by index.
  std::size_t pick(const Bits& alive) const {
    std::size_t best = n_, best_degree = 0;
    alive.for_each([&](std::size_t v) {
      const std::size_t d = degree(v, alive);
      if (best == n_ || d > best_degree) {
        best = v;
        best_degree = d;
      }
    });
    return best;
  }

  // Removes vertices that some maximum independent set always contains
  // (degree 0 or 1), recording them in `taken`.
  void reduce(Bits& alive, std::vector<std::size_t>& taken) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t v = 0; v < n_; ++v) {
        if (!alive.test(v) || degree(v, alive) > 1) continue;
        taken.push_back(v);
        alive.reset(v);
        alive.subtract(conflicts_[v]);
        changed = true;
      }
    }
  }

  std::vector<Bits> components(const Bits& alive) const {
    std::vector<Bits> out;
    Bits left = alive;
    std::vector<std::size_t> stack;
    for (std::size_t seed = 0; seed < n_; ++seed) {
      if (!left.test(seed)) continue;
      Bits comp(n_);
      comp.set(seed);
      left.reset(seed);
      stack.push_back(seed);
      while (!stack.empty()) {
        const auto v = stack.back();
        stack.pop_back();
        Bits fresh = conflicts_[v];
        fresh.intersect(left);
        fresh.for_each([&](std::size_t u) {
          left.reset(u);
          comp.set(u);
          stack.push_back(u);
        });
      }
      out.push_back(std::move(comp));
    }
    return out;
  }

  std::uint64_t solve(Bits alive) {
    if (!budget_.tick()) return 0;
    std::vector<std::size_t> taken;
    reduce(alive, taken);
    if (alive.none()) return taken.size();
    if (auto it = memo_.find(alive); it != memo_.end()) return taken.size() + it->second;

    std::uint64_t value = 0;
    auto parts = components(alive);
    if (parts.size() > 1) {
      for (const auto& part : parts) value += solve(part);
    } else {
      const std::size_t v = pick(alive);
      Bits with = alive;
      with.reset(v);
      with.subtract(conflicts_[v]);
      Bits without = alive;
      without.reset(v);
      value = std::max(1 + solve(with), solve(without));
    }
    if (!budget_.exhausted() && memo_.size() < kMemoCap) memo_.emplace(alive, value);
    return taken.size() + value;
  }

  void rebuild(Bits alive, std::uint64_t value, std::vector<Residue>& out) {
    std::vector<std::size_t> taken;
    reduce(alive, taken);
    for (auto v : taken) out.push_back(residues_[v]);
    value -= taken.size();
    if (alive.none()) return;
    auto parts = components(alive);
    if (parts.size() > 1) {
      for (const auto& part : parts) rebuild(part, solve(part), out);
      return;
    }
    const std::size_t v = pick(alive);
    Bits with = alive;
    with.reset(v);
    with.subtract(conflicts_[v]);
    if (1 + solve(with) == value) {
      out.push_back(residues_[v]);
      rebuild(with, value - 1, out);
    } else {
      alive.reset(v);
      rebuild(alive, value, out);
    }
  }

  Budget budget_;
  std::size_t n_ = 0;
  std::vector<Residue> residues_;
  std::vector<Bits> conflicts_;
  std::unordered_map<Bits, std::uint64_t, BitsHash> memo_;
};

}  // namespace

ThetaResult theta_exact(const ErrorSpec& spec, const SearchLimits& limits) {
  require_within(spec, limits);
  PackingSearch search(spec, limits);
  auto witness = search.run();
  if (search.exhausted()) {
    throw Error(ErrorCode::limit_exceeded, "theta search exhausted its node budget");
  }
  ThetaResult result;
  result.value = witness.size();
  result.witness = CoveringSet(spec.q(), std::move(witness));
  result.nodes_explored = search.nodes();
  return result;
}

DeltaRun delta_run(std::uint64_t g, const ErrorSpec& spec) {
  const std::uint64_t p = spec.q();
  if (p < 3 || !is_prime(p)) {
    throw Error(ErrorCode::invalid_argument,
                "delta_run needs an odd prime modulus, got " + std::to_string(p));
  }
  if (g % p == 0 || multiplicative_order(g, p) != p - 1) {
    throw Error(ErrorCode::invalid_argument,
                std::to_string(g) + " is not a primitive root modulo " +
                    std::to_string(p));
  }
  const std::uint64_t period = p - 1;
  std::vector<bool> in_m(period);
  std::uint64_t power = 1;
  std::uint64_t hits = 0;
  for (std::uint64_t n = 0; n < period; ++n) {
    in_m[n] = (power >= 1 && power <= spec.lambda()) || power + spec.mu() >= p;
    hits += in_m[n];
    power = mod_mul(power, g, p);
  }
  DeltaRun run;
  if (hits == period) {
    run.delta = period;
  } else {
    // Start just after a miss so a single pass sees every run unbroken.
    std::uint64_t start = 0;
    while (in_m[start]) ++start;
    std::uint64_t len = 0;
    for (std::uint64_t k = 1; k <= period; ++k) {
      if (in_m[(start + k) % period]) {
        run.delta = std::max(run.delta, ++len);
      } else {
        len = 0;
      }
    }
  }
  if (run.delta == 0) {
    throw Error(ErrorCode::no_bound,
                "no power of the primitive root lies in M; no bound available");
  }
  run.implied_bound = (period + run.delta - 1) / run.delta + 1;
  return run;
}

}  // namespace covset
