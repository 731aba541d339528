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

#ifndef LBP_COMMON_DEADLINE_HPP
#define LBP_COMMON_DEADLINE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "lbp/core.hpp"

// Going home early under the "still completable" preemption rule when every
// job shares one deadline D.
//
// Everything here works on the jobs that matter after the last forced gap:
// jobs arriving earlier are complete or hopeless by then in every schedule,
// and jobs whose window cannot hold them are never executable. Positions
// below index that list in arrival order (ties by id).
//
// On the grid the slack x = D - T plays two roles. A job with t <= x must be
// finished before leaving at T. Any other job may be left unfinished only if
// its remaining work exceeds x, so it can absorb at most t - x - 1 units; one
// extra completion therefore buys x + 1 units of filler.

namespace lbp {

struct JobClasses {
  Time slack = 0;  // x = D - T
  std::vector<int> short_jobs;
  std::vector<int> long_jobs;
};

JobClasses classify_jobs(const Instance& instance, Time target);

struct TentativeSchedule {
  Time origin = 0;            // end of the last forced gap
  std::vector<int> order;     // job ids in arrival order
  std::vector<Time> arrival;  // per position
  std::vector<char> is_short; // per position
  std::vector<Time> allocation;
  Schedule schedule;          // placement of the allocations, may pass T
  std::vector<std::pair<Time, Time>> gaps;
  Time end = 0;
  // The short jobs alone can all be finished by T.
  bool shorts_fit = true;
};

// Every job in arrival order, short jobs in full and long jobs up to the
// amount that keeps them abandonable at T.
TentativeSchedule build_tentative_schedule(const Instance& instance, Time target);

struct GapConstraints {
  // gap_before[p]: idle time of the tentative schedule before the arrival of
  // position p.
  std::vector<Time> gap_before;
  // required[p]: long completions needed among positions < p. The extra
  // entry at index n covers the shortfall of total work before T.
  std::vector<int> required;
};

GapConstraints gap_constraints(const TentativeSchedule& tentative, Time target, Time slack);

// T(m, k): earliest finishing time of a back-to-back run that completes
// exactly m of the first k positions (all short ones among them) by the
// target, and respects the gap constraints.
struct DPTable {
  Time target = 0;
  Time slack = 0;
  TentativeSchedule tentative;
  GapConstraints constraints;
  // Least number of completions admissible among the first k positions.
  std::vector<int> lower_bound;
  std::vector<std::vector<Time>> value;  // [m][k], kInfinity when infeasible
  std::vector<std::vector<char>> take;   // [m][k], job k completed on the best path

  int positions() const { return static_cast<int>(tentative.order.size()); }
  Time at(int m, int k) const {
    return value[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)];
  }
  // Smallest m with a finite T(m, n), if any.
  std::optional<int> min_completions() const;
  // Job ids completed on the back-pointer path of T(m, n).
  std::vector<int> completed_jobs(int m) const;
  // Tentative schedule is gapless and reaches T: squeeze it instead.
  bool squish_applies() const;
};

DPTable schedule_by_T(const Instance& instance, Time target);

// Turns the table into a feasible schedule leaving exactly at the target,
// escalating the number of completions when the smallest one cannot end with
// a completed piece. nullopt when no escalation works.
std::optional<Schedule> realize_schedule(const Instance& instance, const DPTable& table);

// A feasible schedule leaving exactly at `target`, or nullopt.
std::optional<Schedule> decide_go_home_by(const Instance& instance, Time target);

struct MakespanResult {
  Time makespan = 0;
  Schedule schedule;
  // False when a finer grid strictly improves the leave time, i.e. the best
  // value is only approached in the limit.
  bool attained = true;
  Time refined_scale = 0;     // scale of the improving grid, if any
  Time refined_makespan = 0;  // its leave time in that grid's units
};

struct MakespanOptions {
  bool detect_limit = true;
  // Largest refinement factor tried; 0 means max(2, 3n).
  Time max_refinement = 0;
};

MakespanResult minimize_makespan_common_deadline(const Instance& instance,
                                                 const MakespanOptions& options = {});

}  // namespace lbp

#endif  // LBP_COMMON_DEADLINE_HPP
