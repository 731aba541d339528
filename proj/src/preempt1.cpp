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

#include <vector>

#include "lbp/exact.hpp"
#include "lbp/feasibility.hpp"

namespace lbp {
namespace {

void require_preempt1(const Instance& inst, const char* algo) {
  check_instance(inst);
  if (inst.regime != Regime::kPreemptI) {
    throw PreconditionError(std::string(algo) + " needs the preempt1 regime");
  }
}

// Runs `pick` slot by slot until nothing is or will become executable.
template <class Pick>
Schedule simulate(const Instance& inst, Pick pick) {
  Schedule out;
  ExecState state = ExecState::initial(inst);
  for (;;) {
    const std::vector<int> ready = executable_set(inst, state);
    if (ready.empty()) {
      auto next = next_executable_time(inst, state);
      if (!next) break;
      state.now = *next;
      continue;
    }
    const int id = pick(state, ready);
    append_work(out, id, state.now, state.now + 1);
    ++state.done[static_cast<std::size_t>(id)];
    ++state.now;
  }
  out.leave_time = state.now;
  return out;
}

}  // namespace

SolveResult solve_preempt1_ldd(const Instance& instance, Objective objective) {
  require_preempt1(instance, "preempt1-ldd");
  if (objective == Objective::kWeightedCompleted) {
    throw PreconditionError("preempt1-ldd optimizes total work or makespan");
  }
  auto latest_deadline = [&](const ExecState& s, const std::vector<int>& ready) {
    int best = ready.front();
    for (int id : ready) {
      const Job& j = instance.job(id);
      const Job& b = instance.job(best);
      const Time rem_j = j.length - s.done_of(id), rem_b = b.length - s.done_of(best);
      if (j.deadline > b.deadline || (j.deadline == b.deadline && rem_j < rem_b)) best = id;
    }
    return best;
  };
  SolveResult r;
  r.schedule = simulate(instance, latest_deadline);
  r.value = evaluate(instance, r.schedule, objective);
  return r;
}

SolveResult solve_preempt1_min_weight(const Instance& instance) {
  require_preempt1(instance, "preempt1-weight");
  if (instance.scale < 3 * static_cast<Time>(instance.size())) {
    throw PreconditionError("preempt1-weight needs scale >= 3n so one grid unit can act as epsilon");
  }
  // Earliest deadline first, but a job with a single unit left is held back
  // while anything else can run; completion happens only when forced.
  auto edd_minus_epsilon = [&](const ExecState& s, const std::vector<int>& ready) {
    int best = -1;
    bool best_open = false;
    for (int id : ready) {
      const Job& j = instance.job(id);
      const bool open = j.length - s.done_of(id) > 1;
      if (best < 0 || (open && !best_open) ||
          (open == best_open && j.deadline < instance.job(best).deadline)) {
        best = id;
        best_open = open;
      }
    }
    return best;
  };
  SolveResult r;
  r.schedule = simulate(instance, edd_minus_epsilon);
  r.value = evaluate(instance, r.schedule, Objective::kWeightedCompleted);
  return r;
}

}  // namespace lbp
