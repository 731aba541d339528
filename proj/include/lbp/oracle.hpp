// Copyright 2026 The LBP Authors
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

#ifndef LBP_ORACLE_HPP
#define LBP_ORACLE_HPP

#include <cstddef>
#include <optional>
#include <span>

#include "lbp/core.hpp"

namespace lbp {

// Size limits for exhaustive search. Exceeding any of them throws
// BudgetExceeded rather than returning a partial answer.
struct OracleLimits {
  int max_jobs = 6;
  Time max_horizon = 24;
  std::size_t max_states = 4'000'000;
  // Memoize on (time, executed amounts). When off, a plain depth-first search
  // runs instead, optionally with branch-and-bound cuts.
  bool memoize = true;
  bool prune = true;

  static OracleLimits nonpreemptive() { return {10, 40}; }
  static OracleLimits preemptive() { return {6, 24}; }
  static OracleLimits unlimited(std::size_t states = 4'000'000) {
    return {1 << 20, kInfinity, states};
  }
};

struct OracleResult {
  Time optimum = 0;
  Schedule witness;
  std::size_t states = 0;
};

// Exact optimum over every busy-requirement-respecting nonpreemptive schedule:
// branches over which executable job to start at each decision instant.
OracleResult oracle_nonpreemptive(const Instance& instance, Objective objective,
                                  const OracleLimits& limits = OracleLimits::nonpreemptive());

// Exact optimum on the grid for the preemptive regimes: branches over which
// executable job receives each unit slot.
OracleResult oracle_preemptive(const Instance& instance, Objective objective,
                               const OracleLimits& limits = OracleLimits::preemptive());

// Dispatches on the instance regime with the matching default limits.
OracleResult oracle_optimize(const Instance& instance, Objective objective);

// A feasible schedule whose leave time is exactly `leave`, if one exists.
// Works for every regime; only the state budget applies.
std::optional<Schedule> oracle_leave_exactly(const Instance& instance, Time leave,
                                             std::size_t max_states = 8'000'000);

// Standard reachability table; shares nothing with the scheduling code.
bool subset_sum_reachable(std::span<const Time> values, Time target);

}  // namespace lbp

#endif  // LBP_ORACLE_HPP
