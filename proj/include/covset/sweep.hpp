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

// Range sweeps comparing the counting lower bound, the exact and greedy
// optimum, and the explicit construction size for each q.

#ifndef COVSET_SWEEP_HPP
#define COVSET_SWEEP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "covset/search.hpp"

namespace covset {

// How lambda or mu is derived from q. Text forms: "<k>" (constant),
// "sqrt" (ceil(sqrt q)), "<a>/<b>" (ceil(a q / b)).
class SweepRule {
 public:
  static SweepRule parse(std::string_view text);
  std::uint64_t apply(std::uint64_t q) const;

 private:
  enum class Kind { constant, sqrt, fraction };
  Kind kind_ = Kind::constant;
  std::uint64_t a_ = 0;
  std::uint64_t b_ = 1;
};

struct SweepOptions {
  std::uint64_t q_from = 2;
  std::uint64_t q_to = 2;
  SweepRule lambda_rule = SweepRule::parse("1");
  SweepRule mu_rule = SweepRule::parse("0");
  bool primes_only = false;
  bool exact = true;
  SearchLimits limits;
};

struct SweepRow {
  std::uint64_t q = 0;
  std::uint64_t lambda = 0;
  std::uint64_t mu = 0;
  std::uint64_t lower_bound = 0;
  std::optional<std::uint64_t> omega_exact;
  bool exact = false;
  std::uint64_t omega_greedy = 0;
  std::uint64_t construction_size = 0;
};

/// One row per q in [q_from, q_to] whose derived (lambda, mu) is a valid
/// spec; other q are skipped. Rows are in ascending q. With exact set, a q
/// above limits.max_q throws Error(limit_exceeded) before any work is done.
std::vector<SweepRow> sweep(const SweepOptions& options);

std::string sweep_to_csv(const std::vector<SweepRow>& rows, bool exact_column);

}  // namespace covset

#endif  // COVSET_SWEEP_HPP
