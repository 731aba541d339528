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

#include "lbp/core.hpp"

#include <algorithm>
#include <numeric>

namespace lbp {

Time Instance::horizon() const {
  Time k = 0;
  for (const Job& j : jobs) k = std::max(k, j.deadline);
  return k;
}

Job make_job(int id, Time arrival, Time deadline, Time length) {
  return Job{id, arrival, deadline, length, length};
}

Instance make_instance(Regime regime,
                       std::span<const std::array<Time, 3>> arrival_deadline_length,
                       Time scale) {
  Instance inst;
  inst.regime = regime;
  inst.scale = scale;
  int id = 0;
  for (const auto& [a, d, t] : arrival_deadline_length) {
    inst.jobs.push_back(make_job(id++, a, d, t));
  }
  return inst;
}

void check_instance(const Instance& instance) {
  if (instance.scale < 1) throw PreconditionError("scale must be positive");
  for (int i = 0; i < instance.size(); ++i) {
    const Job& j = instance.jobs[static_cast<std::size_t>(i)];
    if (j.id != i) throw PreconditionError("job ids must be 0..n-1 in order");
    if (j.arrival < 0) throw PreconditionError("job " + std::to_string(i) + ": negative arrival");
    if (j.length < 1) throw PreconditionError("job " + std::to_string(i) + ": length must be >= 1");
    if (j.weight < 0) throw PreconditionError("job " + std::to_string(i) + ": negative weight");
  }
}

Time adjusted_critical_time(const Job& job, Time done) {
  if (done < 0 || done > job.length) {
    throw PreconditionError("executed amount out of range for job " + std::to_string(job.id));
  }
  return critical_time(job) + done;
}

std::vector<Time> executed_amounts(const Instance& instance, const Schedule& schedule) {
  std::vector<Time> done(instance.jobs.size(), 0);
  for (const Segment& s : schedule.segments) {
    if (s.job_id < 0 || s.job_id >= instance.size()) {
      throw PreconditionError("segment refers to unknown job " + std::to_string(s.job_id));
    }
    done[static_cast<std::size_t>(s.job_id)] += s.length();
  }
  return done;
}

Schedule normalized(Schedule schedule) {
  std::stable_sort(schedule.segments.begin(), schedule.segments.end(),
                   [](const Segment& x, const Segment& y) { return x.start < y.start; });
  Schedule out;
  out.leave_time = schedule.leave_time;
  for (const Segment& s : schedule.segments) {
    if (s.end <= s.start) continue;
    append_work(out, s.job_id, s.start, s.end);
  }
  return out;
}

void append_work(Schedule& schedule, int job_id, Time start, Time end) {
  if (end <= start) return;
  if (!schedule.segments.empty()) {
    Segment& last = schedule.segments.back();
    if (last.job_id == job_id && last.end == start) {
      last.end = end;
      return;
    }
  }
  schedule.segments.push_back(Segment{job_id, start, end});
}

Time evaluate(const Instance& instance, const Schedule& schedule, Objective objective) {
  const std::vector<Time> done = executed_amounts(instance, schedule);
  switch (objective) {
    case Objective::kTotalWork:
      return std::accumulate(done.begin(), done.end(), Time{0});
    case Objective::kWeightedCompleted: {
      Time w = 0;
      for (const Job& j : instance.jobs) {
        if (done[static_cast<std::size_t>(j.id)] == j.length) w += j.weight;
      }
      return w;
    }
    case Objective::kMakespan:
      return schedule.leave_time;
  }
  return 0;
}

Instance scaled(const Instance& instance, Time factor) {
  Instance out = instance;
  out.scale *= factor;
  for (Job& j : out.jobs) {
    j.arrival *= factor;
    j.deadline *= factor;
    j.length *= factor;
    j.weight *= factor;
  }
  return out;
}

std::string_view to_string(Regime regime) {
  switch (regime) {
    case Regime::kNonpreemptive: return "nonpreemptive";
    case Regime::kPreemptI: return "preempt1";
    case Regime::kPreemptII: return "preempt2";
    case Regime::kPreemptIII: return "preempt3";
  }
  return "?";
}

std::string_view to_string(Objective objective) {
  switch (objective) {
    case Objective::kTotalWork: return "total_work";
    case Objective::kWeightedCompleted: return "weighted_completed";
    case Objective::kMakespan: return "makespan";
  }
  return "?";
}

std::optional<Regime> parse_regime(std::string_view text) {
  for (Regime r : {Regime::kNonpreemptive, Regime::kPreemptI, Regime::kPreemptII,
                   Regime::kPreemptIII}) {
    if (text == to_string(r)) return r;
  }
  return std::nullopt;
}

std::optional<Objective> parse_objective(std::string_view text) {
  if (text == "work") return Objective::kTotalWork;
  if (text == "weight") return Objective::kWeightedCompleted;
  for (Objective o : {Objective::kTotalWork, Objective::kWeightedCompleted,
                      Objective::kMakespan}) {
    if (text == to_string(o)) return o;
  }
  return std::nullopt;
}

std::string to_string(Rational r) {
  const std::int64_t g = std::gcd(r.num, r.den);
  if (g > 1) {
    r.num /= g;
    r.den /= g;
  }
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

}  // namespace lbp
