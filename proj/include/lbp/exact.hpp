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

#ifndef LBP_EXACT_HPP
#define LBP_EXACT_HPP

#include <cstddef>

#include "lbp/core.hpp"

namespace lbp {

struct SolveResult {
  Schedule schedule;
  Time value = 0;
};

// ---------------------------------------------------------------------------
// Nonpreemptive

// Unit-length jobs: at every instant run the executable job with the latest
// deadline (ties: lowest id). Optimal for total work.
SolveResult solve_unit_ldd(const Instance& instance);

// True when a job's earliest completion is no later than another's latest
// start, i.e. `first` can run before `second`.
constexpr bool can_precede(const Job& first, const Job& second) {
  return first.arrival + first.length <= critical_time(second);
}

// Every window is shorter than twice its job.
bool has_narrow_windows(const Instance& instance);

// Narrow windows fix the relative order of any two jobs, so the set of
// still-available jobs depends only on the current time. Shortest path over
// decision instants; O(n K).
SolveResult solve_narrow_window_dp(const Instance& instance, Objective objective);

struct RatioBounds {
  // Every job satisfies d - a < R t.
  Rational window_ratio;
  // max t / min t <= Delta.
  Rational length_ratio;
};

// Tightest bounds the instance satisfies (R is the least (d-a+1)/t maximum).
RatioBounds infer_ratio_bounds(const Instance& instance);

// Shortest path over states (time, executed jobs whose latest start has not
// yet passed). With R and Delta bounded that set stays small.
SolveResult solve_bounded_ratio_dp(const Instance& instance, const RatioBounds& bounds,
                                   Objective objective, std::size_t max_states = 2'000'000);

// All jobs share one arrival: some optimal schedule runs its jobs back to back
// in earliest-deadline order. For every end offset E, a subset DP over the
// EDD sequence decides whether a gapless run of length E exists that leaves
// no job startable at its end.
SolveResult solve_common_release_dp(const Instance& instance, Objective objective);

// ---------------------------------------------------------------------------
// Preemptive, in-window executability

// Latest-deadline-first slot by slot; equal deadlines go to the job with less
// remaining work, then the lower id. Total work or makespan only.
SolveResult solve_preempt1_ldd(const Instance& instance, Objective objective);

// Earliest-deadline-first, stopping each job one grid unit short of
// completion while any other work is available. Requires scale >= 3n so one
// grid unit is a valid epsilon.
SolveResult solve_preempt1_min_weight(const Instance& instance);

}  // namespace lbp

#endif  // LBP_EXACT_HPP
