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

#ifndef LBP_FEASIBILITY_HPP
#define LBP_FEASIBILITY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lbp/core.hpp"

namespace lbp {

// Progress of a partially replayed schedule. `active` is only meaningful for
// the nonpreemptive regime: the job currently mid-run.
struct ExecState {
  Time now = 0;
  std::vector<Time> done;
  std::optional<int> active;

  static ExecState initial(const Instance& instance, Time now = 0) {
    return ExecState{now, std::vector<Time>(instance.jobs.size(), 0), std::nullopt};
  }
  Time done_of(int job) const { return done[static_cast<std::size_t>(job)]; }
  bool started(int job) const { return done_of(job) > 0; }
};

enum class ViolationKind {
  kIdleWhileExecutable,
  kRanInexecutable,
  kPreemptedNonpreemptive,
  kStartedNotCompleted,
  kLeftWhileExecutable,
  kOverlap,
  kOutsideWindow,
};

struct Violation {
  ViolationKind kind;
  Time time = 0;
  std::optional<int> job_id;

  friend bool operator==(const Violation&, const Violation&) = default;
};

std::string to_string(ViolationKind kind);
std::string to_string(const Violation& v);

// Whether `job` may receive the slot [state.now, state.now + 1).
bool is_executable(const Instance& instance, const ExecState& state, int job);

std::vector<int> executable_set(const Instance& instance, const ExecState& state);

// Earliest time >= state.now at which `job` becomes executable if no further
// work is done; nullopt if never.
std::optional<Time> earliest_executable_time(const Instance& instance, const ExecState& state,
                                             int job);

// Minimum of earliest_executable_time over all jobs.
std::optional<Time> next_executable_time(const Instance& instance, const ExecState& state);

// Going home at state.now is legal iff nothing is executable now or later.
inline bool can_leave(const Instance& instance, const ExecState& state) {
  return !next_executable_time(instance, state).has_value();
}

// Replays the schedule and reports every rule it breaks; empty means feasible.
std::vector<Violation> validate(const Instance& instance, const Schedule& schedule);

struct ForcedGaps {
  std::vector<std::pair<Time, Time>> gaps;
  // End of the last forced gap; 0 when there is none.
  Time end = 0;
};

// Intervals where every schedule must idle because less work has arrived than
// time has elapsed. Never-executable jobs are ignored.
ForcedGaps forced_gaps(const Instance& instance);

}  // namespace lbp

#endif  // LBP_FEASIBILITY_HPP
