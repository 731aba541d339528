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

#include "lbp/common_deadline.hpp"

#include <algorithm>

#include "lbp/feasibility.hpp"

namespace lbp {
namespace {

Time common_deadline(const Instance& inst) {
  if (inst.jobs.empty()) return 0;
  const Time d = inst.jobs.front().deadline;
  for (const Job& j : inst.jobs) {
    if (j.deadline != d) throw PreconditionError("all jobs must share one deadline");
  }
  return d;
}

void require_regime(const Instance& inst) {
  if (inst.regime != Regime::kPreemptII) {
    throw PreconditionError("the common-deadline algorithm needs the preempt2 regime");
  }
}

struct Window {
  Time origin = 0;
  std::vector<int> order;
};

Window relevant_jobs(const Instance& inst) {
  Window w;
  w.origin = forced_gaps(inst).end;
  for (const Job& j : inst.jobs) {
    if (!j.degenerate() && j.arrival >= w.origin) w.order.push_back(j.id);
  }
  std::stable_sort(w.order.begin(), w.order.end(), [&](int a, int b) {
    return inst.job(a).arrival < inst.job(b).arrival;
  });
  return w;
}

Time div_ceil(Time a, Time b) { return a <= 0 ? 0 : (a + b - 1) / b; }

// Any legal run up to the end of the last forced gap; every job arriving
// before it is finished or beyond rescue by then.
ExecState run_prefix(const Instance& inst, Time origin, Schedule& out) {
  ExecState s = ExecState::initial(inst);
  while (s.now < origin) {
    const std::vector<int> ready = executable_set(inst, s);
    if (ready.empty()) {
      s.now = std::min(origin, next_executable_time(inst, s).value_or(origin));
      continue;
    }
    append_work(out, ready.front(), s.now, s.now + 1);
    ++s.done[static_cast<std::size_t>(ready.front())];
    ++s.now;
  }
  return s;
}

bool feasible(const Instance& inst, const Schedule& s) { return validate(inst, s).empty(); }

// Places allocations back to back in arrival order from `origin`.
Time place(const Instance& inst, const std::vector<int>& order, const std::vector<Time>& alloc,
           Time origin, Schedule* out, std::vector<std::pair<Time, Time>>* gaps) {
  Time cur = origin;
  for (std::size_t p = 0; p < order.size(); ++p) {
    if (alloc[p] == 0) continue;
    const Time start = std::max(cur, inst.job(order[p]).arrival);
    if (start > cur && gaps) gaps->emplace_back(cur, start);
    if (out) append_work(*out, order[p], start, start + alloc[p]);
    cur = start + alloc[p];
  }
  return cur;
}

// Shrinks long allocations, latest first, until the last short job ends at T.
std::optional<Schedule> squish(const Instance& inst, const DPTable& table) {
  const TentativeSchedule& ts = table.tentative;
  std::vector<Time> alloc = ts.allocation;
  std::size_t last_short = ts.order.size();
  for (std::size_t p = 0; p < ts.order.size(); ++p) {
    if (ts.is_short[p]) last_short = p;
  }
  if (last_short == ts.order.size()) return std::nullopt;
  for (std::size_t p = last_short + 1; p < alloc.size(); ++p) alloc[p] = 0;

  Time end = place(inst, ts.order, alloc, ts.origin, nullptr, nullptr);
  std::size_t p = last_short;
  while (end > table.target) {
    while (p > 0 && (ts.is_short[p - 1] || alloc[p - 1] == 0)) --p;
    if (p == 0) return std::nullopt;
    --alloc[p - 1];
    end = place(inst, ts.order, alloc, ts.origin, nullptr, nullptr);
  }
  std::vector<std::pair<Time, Time>> gaps;
  Schedule out;
  run_prefix(inst, ts.origin, out);
  end = place(inst, ts.order, alloc, ts.origin, &out, &gaps);
  if (end != table.target || !gaps.empty()) return std::nullopt;
  out.leave_time = table.target;
  if (!feasible(inst, out)) return std::nullopt;
  return out;
}

// Fills [origin, T) slot by slot: jobs to be completed run only when their
// remaining total leaves no room for anything else; otherwise the abandonable
// job closest to its adjusted critical time absorbs the slot.
std::optional<Schedule> fill(const Instance& inst, const DPTable& table,
                             const std::vector<int>& completed) {
  const TentativeSchedule& ts = table.tentative;
  const Time target = table.target;
  const Time slack = table.slack;
  std::vector<char> in_c(inst.jobs.size(), 0);
  for (int id : completed) in_c[static_cast<std::size_t>(id)] = 1;

  Schedule out;
  ExecState s = run_prefix(inst, ts.origin, out);
  Time owed = 0;
  for (int id : completed) owed += inst.job(id).length;

  while (s.now < target) {
    if (owed > target - s.now) return std::nullopt;
    int pick = -1;
    int filler = -1;
    Time filler_key = kInfinity;
    for (int id : ts.order) {
      const Job& j = inst.job(id);
      const Time done = s.done_of(id);
      if (j.arrival > s.now) continue;
      if (in_c[static_cast<std::size_t>(id)]) {
        if (pick < 0 && done < j.length) pick = id;
        continue;
      }
      if (j.length <= slack || done >= j.length - slack - 1) continue;
      if (!is_executable(inst, s, id)) continue;
      const Time key = critical_time(j) + done;
      if (key < filler_key) {
        filler_key = key;
        filler = id;
      }
    }
    int run = -1;
    if (owed == target - s.now) run = pick;
    else if (filler >= 0) run = filler;
    else run = pick;
    if (run < 0) {
      if (owed > 0 || !executable_set(inst, s).empty()) return std::nullopt;
      ++s.now;
      continue;
    }
    append_work(out, run, s.now, s.now + 1);
    ++s.done[static_cast<std::size_t>(run)];
    if (in_c[static_cast<std::size_t>(run)]) --owed;
    ++s.now;
  }
  if (owed != 0) return std::nullopt;
  out.leave_time = target;
  if (!feasible(inst, out)) return std::nullopt;
  return out;
}

// Gapless (after the forced gaps) schedule leaving exactly at `target`.
std::optional<Schedule> decide_exact(const Instance& inst, Time target) {
  const DPTable table = schedule_by_T(inst, target);
  if (table.positions() == 0) {
    Schedule out;
    run_prefix(inst, table.tentative.origin, out);
    out.leave_time = target;
    if (feasible(inst, out)) return out;
    return std::nullopt;
  }
  return realize_schedule(inst, table);
}

}  // namespace

JobClasses classify_jobs(const Instance& instance, Time target) {
  const Time deadline = common_deadline(instance);
  if (target > deadline) throw PreconditionError("target is past the common deadline");
  JobClasses c;
  c.slack = deadline - target;
  for (int id : relevant_jobs(instance).order) {
    (instance.job(id).length <= c.slack ? c.short_jobs : c.long_jobs).push_back(id);
  }
  return c;
}

TentativeSchedule build_tentative_schedule(const Instance& instance, Time target) {
  const Time deadline = common_deadline(instance);
  if (target > deadline) throw PreconditionError("target is past the common deadline");
  const Time slack = deadline - target;
  const Window w = relevant_jobs(instance);
  TentativeSchedule ts;
  ts.origin = w.origin;
  ts.order = w.order;
  Time shorts_end = w.origin;
  for (int id : ts.order) {
    const Job& j = instance.job(id);
    const bool is_short = j.length <= slack;
    ts.arrival.push_back(j.arrival);
    ts.is_short.push_back(is_short);
    ts.allocation.push_back(is_short ? j.length : j.length - slack - 1);
    if (is_short) shorts_end = std::max(shorts_end, j.arrival) + j.length;
  }
  ts.shorts_fit = shorts_end <= target;
  ts.end = place(instance, ts.order, ts.allocation, ts.origin, &ts.schedule, &ts.gaps);
  ts.schedule.leave_time = std::max(ts.end, target);
  return ts;
}

GapConstraints gap_constraints(const TentativeSchedule& tentative, Time target, Time slack) {
  const std::size_t n = tentative.order.size();
  const Time unit = slack + 1;
  GapConstraints g;
  g.gap_before.assign(n, 0);
  g.required.assign(n + 1, 0);
  for (std::size_t p = 0; p < n; ++p) {
    Time idle = 0;
    for (const auto& [from, to] : tentative.gaps) {
      idle += std::max<Time>(0, std::min(to, tentative.arrival[p]) - from);
    }
    g.gap_before[p] = idle;
    g.required[p] = static_cast<int>(div_ceil(idle, unit));
  }
  Time work = 0;
  for (Time a : tentative.allocation) work += a;
  g.required[n] = static_cast<int>(div_ceil(target - tentative.origin - work, unit));
  return g;
}

DPTable schedule_by_T(const Instance& instance, Time target) {
  DPTable t;
  t.target = target;
  t.slack = common_deadline(instance) - target;
  t.tentative = build_tentative_schedule(instance, target);
  t.constraints = gap_constraints(t.tentative, target, t.slack);
  const int n = t.positions();
  const auto un = static_cast<std::size_t>(n);

  t.lower_bound.assign(un + 1, 0);
  int shorts = 0;
  int need = 0;
  for (std::size_t k = 0; k <= un; ++k) {
    if (k > 0 && t.tentative.is_short[k - 1]) ++shorts;
    need = std::max(need, t.constraints.required[k]);
    t.lower_bound[k] = shorts + need;
  }

  t.value.assign(un + 1, std::vector<Time>(un + 1, kInfinity));
  t.take.assign(un + 1, std::vector<char>(un + 1, 0));
  t.value[0][0] = t.tentative.origin;
  for (std::size_t k = 1; k <= un; ++k) {
    const Job& j = instance.job(t.tentative.order[k - 1]);
    const bool is_short = t.tentative.is_short[k - 1];
    for (std::size_t m = 0; m <= k; ++m) {
      Time skip = kInfinity;
      if (!is_short) skip = t.value[m][k - 1];
      Time finish = kInfinity;
      if (m > 0 && t.value[m - 1][k - 1] < kInfinity) {
        const Time end = std::max(j.arrival, t.value[m - 1][k - 1]) + j.length;
        if (end <= target) finish = end;
      }
      if (skip <= finish) {
        t.value[m][k] = skip;
      } else {
        t.value[m][k] = finish;
        t.take[m][k] = 1;
      }
      if (static_cast<int>(m) < t.lower_bound[k]) {
        t.value[m][k] = kInfinity;
        t.take[m][k] = 0;
      }
    }
  }
  if (n > 0) t.value[0][un] = kInfinity;
  return t;
}

std::optional<Schedule> realize_schedule(const Instance& instance, const DPTable& table) {
  require_regime(instance);
  if (!table.tentative.shorts_fit) return std::nullopt;
  if (table.squish_applies()) {
    if (auto s = squish(instance, table)) return s;
  }
  const auto first = table.min_completions();
  if (!first) return std::nullopt;
  for (int m = *first; m <= table.positions(); ++m) {
    if (table.at(m, table.positions()) >= kInfinity) continue;
    if (auto s = fill(instance, table, table.completed_jobs(m))) return s;
  }
  return std::nullopt;
}

std::optional<Schedule> decide_go_home_by(const Instance& instance, Time target) {
  require_regime(instance);
  const Time deadline = common_deadline(instance);
  const Time origin = forced_gaps(instance).end;
  if (target < origin) {
    throw PreconditionError("target lies before the end of the last forced gap");
  }
  // Leaving at T after idling from T0 is the same as leaving at T0 when
  // nothing is executable from T0 on.
  for (Time t0 = std::min(target, deadline); t0 >= origin; --t0) {
    if (auto s = decide_exact(instance, t0)) {
      s->leave_time = target;
      if (feasible(instance, *s)) return s;
    }
  }
  return std::nullopt;
}

MakespanResult minimize_makespan_common_deadline(const Instance& instance,
                                                 const MakespanOptions& options) {
  require_regime(instance);
  const Time deadline = common_deadline(instance);
  const Time origin = forced_gaps(instance).end;
  MakespanResult r;
  bool found = false;
  for (Time t = origin; t <= std::max(origin, deadline) && !found; ++t) {
    if (auto s = decide_exact(instance, t)) {
      r.makespan = t;
      r.schedule = *s;
      found = true;
    }
  }
  if (!found) throw Error("no feasible leave time found");
  if (!options.detect_limit) return r;

  const Time n = static_cast<Time>(instance.jobs.size());
  const Time max_factor = options.max_refinement > 0 ? options.max_refinement
                                                     : std::max<Time>(2, 3 * n);
  for (Time f = 2; f <= max_factor; f *= 2) {
    const Instance fine = scaled(instance, f);
    const Time fine_origin = forced_gaps(fine).end;
    for (Time t = fine_origin; t < f * r.makespan; ++t) {
      if (decide_exact(fine, t)) {
        r.attained = false;
        r.refined_scale = fine.scale;
        r.refined_makespan = t;
        return r;
      }
    }
  }
  return r;
}

std::optional<int> DPTable::min_completions() const {
  const int n = positions();
  for (int m = 1; m <= n; ++m) {
    if (at(m, n) < kInfinity) return m;
  }
  return std::nullopt;
}

std::vector<int> DPTable::completed_jobs(int m) const {
  std::vector<int> out;
  for (int k = positions(); k >= 1 && m >= 0; --k) {
    if (take[static_cast<std::size_t>(m)][static_cast<std::size_t>(k)]) {
      out.push_back(tentative.order[static_cast<std::size_t>(k - 1)]);
      --m;
    }
  }
  std::reverse(out.begin(), out.end());
  return out;
}

bool DPTable::squish_applies() const {
  return tentative.gaps.empty() && tentative.end >= target &&
         std::find(tentative.is_short.begin(), tentative.is_short.end(), 1) != tentative.is_short.end();
}

}  // namespace lbp
