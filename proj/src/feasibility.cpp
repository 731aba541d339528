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

#include "lbp/feasibility.hpp"

#include <algorithm>

namespace lbp {

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kIdleWhileExecutable: return "IDLE_WHILE_EXECUTABLE";
    case ViolationKind::kRanInexecutable: return "RAN_INEXECUTABLE";
    case ViolationKind::kPreemptedNonpreemptive: return "PREEMPTED_NONPREEMPTIVE";
    case ViolationKind::kStartedNotCompleted: return "STARTED_NOT_COMPLETED";
    case ViolationKind::kLeftWhileExecutable: return "LEFT_WHILE_EXECUTABLE";
    case ViolationKind::kOverlap: return "OVERLAP";
    case ViolationKind::kOutsideWindow: return "OUTSIDE_WINDOW";
  }
  return "?";
}

std::string to_string(const Violation& v) {
  std::string s = to_string(v.kind) + " time=" + std::to_string(v.time);
  if (v.job_id) s += " job=" + std::to_string(*v.job_id);
  return s;
}

namespace {

// Membership test at time `now` with `done` units executed, ignoring `active`.
bool executable_at(Regime regime, const Job& j, Time done, Time now) {
  if (j.degenerate() || done >= j.length || now < j.arrival) return false;
  switch (regime) {
    case Regime::kNonpreemptive:
      return done == 0 && now <= critical_time(j);
    case Regime::kPreemptI:
      return now + 1 <= j.deadline;
    // Under the completion obligation, work on a job that can no longer be
    // finished is forbidden, so such a job cannot demand the processor either.
    case Regime::kPreemptII:
    case Regime::kPreemptIII:
      return now + (j.length - done) <= j.deadline;
  }
  return false;
}

}  // namespace

bool is_executable(const Instance& instance, const ExecState& state, int job) {
  if (instance.regime == Regime::kNonpreemptive && state.active) return *state.active == job;
  return executable_at(instance.regime, instance.job(job), state.done_of(job), state.now);
}

std::vector<int> executable_set(const Instance& instance, const ExecState& state) {
  std::vector<int> out;
  for (const Job& j : instance.jobs) {
    if (is_executable(instance, state, j.id)) out.push_back(j.id);
  }
  return out;
}

std::optional<Time> earliest_executable_time(const Instance& instance, const ExecState& state,
                                             int job) {
  if (instance.regime == Regime::kNonpreemptive && state.active) {
    if (*state.active == job) return state.now;
    return std::nullopt;
  }
  const Job& j = instance.job(job);
  // Every membership test is monotone: once false after arrival, false forever.
  const Time t = std::max(state.now, j.arrival);
  if (executable_at(instance.regime, j, state.done_of(job), t)) return t;
  return std::nullopt;
}

std::optional<Time> next_executable_time(const Instance& instance, const ExecState& state) {
  std::optional<Time> best;
  for (const Job& j : instance.jobs) {
    if (auto t = earliest_executable_time(instance, state, j.id)) {
      if (!best || *t < *best) best = t;
    }
  }
  return best;
}

std::vector<Violation> validate(const Instance& instance, const Schedule& schedule) {
  std::vector<Violation> out;
  auto report = [&](ViolationKind kind, Time time, std::optional<int> job) {
    out.push_back(Violation{kind, time, job});
  };

  std::vector<Segment> segs;
  for (const Segment& s : schedule.segments) {
    if (s.job_id < 0 || s.job_id >= instance.size() || s.end <= s.start) {
      report(ViolationKind::kOutsideWindow, s.start, s.job_id);
      continue;
    }
    const Job& j = instance.job(s.job_id);
    if (s.start < j.arrival || s.end > j.deadline) {
      report(ViolationKind::kOutsideWindow, s.start < j.arrival ? s.start : j.deadline, s.job_id);
    }
    segs.push_back(s);
  }
  std::stable_sort(segs.begin(), segs.end(),
                   [](const Segment& a, const Segment& b) { return a.start < b.start; });
  for (std::size_t k = 1; k < segs.size(); ++k) {
    if (segs[k].start < segs[k - 1].end) report(ViolationKind::kOverlap, segs[k].start, segs[k].job_id);
  }
  for (const Segment& s : segs) {
    if (s.end > schedule.leave_time) {
      report(ViolationKind::kLeftWhileExecutable, schedule.leave_time, s.job_id);
      break;
    }
  }

  const bool nonpreemptive = instance.regime == Regime::kNonpreemptive;
  ExecState state = ExecState::initial(instance);
  std::size_t next_seg = 0;
  Time tau = 0;
  std::optional<int> last_bad;  // job of the RAN_INEXECUTABLE run in progress

  while (tau < schedule.leave_time) {
    while (next_seg < segs.size() && segs[next_seg].end <= tau) ++next_seg;
    const bool running = next_seg < segs.size() && segs[next_seg].start <= tau;
    state.now = tau;

    if (!running) {
      last_bad.reset();
      if (nonpreemptive && state.active) {
        report(ViolationKind::kPreemptedNonpreemptive, tau, *state.active);
        state.active.reset();
      }
      Time resume = schedule.leave_time;
      if (next_seg < segs.size()) resume = std::min(resume, segs[next_seg].start);
      if (auto t = next_executable_time(instance, state); t && *t < resume) {
        report(ViolationKind::kIdleWhileExecutable, *t, std::nullopt);
      }
      tau = resume;
      continue;
    }

    const int job = segs[next_seg].job_id;
    if (nonpreemptive && state.active && *state.active != job) {
      report(ViolationKind::kPreemptedNonpreemptive, tau, *state.active);
      state.active.reset();
    }
    if (!is_executable(instance, state, job)) {
      if (last_bad != job) report(ViolationKind::kRanInexecutable, tau, job);
      last_bad = job;
    } else {
      last_bad.reset();
    }
    Time& done = state.done[static_cast<std::size_t>(job)];
    ++done;
    if (nonpreemptive) {
      if (done < instance.job(job).length) state.active = job;
      else state.active.reset();
    }
    ++tau;
  }

  state.now = schedule.leave_time;
  if (nonpreemptive && state.active) {
    report(ViolationKind::kPreemptedNonpreemptive, state.now, *state.active);
  }
  if (instance.regime == Regime::kPreemptIII) {
    for (const Job& j : instance.jobs) {
      const Time d = state.done_of(j.id);
      if (d > 0 && d < j.length) report(ViolationKind::kStartedNotCompleted, state.now, j.id);
    }
  }
  for (const Job& j : instance.jobs) {
    if (earliest_executable_time(instance, state, j.id)) {
      report(ViolationKind::kLeftWhileExecutable, state.now, j.id);
      break;
    }
  }
  return out;
}

ForcedGaps forced_gaps(const Instance& instance) {
  std::vector<const Job*> order;
  for (const Job& j : instance.jobs) {
    if (!j.degenerate()) order.push_back(&j);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const Job* a, const Job* b) { return a->arrival < b->arrival; });
  ForcedGaps out;
  Time cursor = 0;  // partial sum of lengths since the last re-zeroing
  for (const Job* j : order) {
    if (cursor < j->arrival) {
      out.gaps.emplace_back(cursor, j->arrival);
      out.end = j->arrival;
      cursor = j->arrival;
    }
    cursor += j->length;
  }
  return out;
}

}  // namespace lbp
