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

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "lbp/exact.hpp"

namespace lbp {
namespace {

void require_nonpreemptive(const Instance& inst, const char* algo) {
  check_instance(inst);
  if (inst.regime != Regime::kNonpreemptive) {
    throw PreconditionError(std::string(algo) + " needs the nonpreemptive regime");
  }
}

Time step_cost(const Job& j, Objective obj) {
  switch (obj) {
    case Objective::kTotalWork: return j.length;
    case Objective::kWeightedCompleted: return j.weight;
    case Objective::kMakespan: return 0;
  }
  return 0;
}

// Earliest arrival after `now` of a job that is startable when it arrives.
std::optional<Time> next_startable_arrival(const Instance& inst, Time now) {
  std::optional<Time> best;
  for (const Job& j : inst.jobs) {
    if (j.arrival > now && j.arrival <= critical_time(j) && (!best || j.arrival < *best)) {
      best = j.arrival;
    }
  }
  return best;
}

__extension__ using Wide = __int128;

bool less_ratio(Rational a, Rational b) {  // a < b, positive denominators
  return static_cast<Wide>(a.num) * b.den < static_cast<Wide>(b.num) * a.den;
}

}  // namespace

SolveResult solve_unit_ldd(const Instance& instance) {
  require_nonpreemptive(instance, "unit-ldd");
  for (const Job& j : instance.jobs) {
    if (j.length != 1) throw PreconditionError("unit-ldd needs unit-length jobs");
  }
  std::vector<char> done(instance.jobs.size(), 0);
  SolveResult r;
  Time now = 0;
  for (;;) {
    const Job* pick = nullptr;
    for (const Job& j : instance.jobs) {
      if (done[static_cast<std::size_t>(j.id)] || j.arrival > now || now > critical_time(j)) continue;
      if (!pick || j.deadline > pick->deadline) pick = &j;
    }
    if (!pick) {
      std::optional<Time> next;
      for (const Job& j : instance.jobs) {
        if (!done[static_cast<std::size_t>(j.id)] && j.arrival > now &&
            j.arrival <= critical_time(j) && (!next || j.arrival < *next)) {
          next = j.arrival;
        }
      }
      if (!next) break;
      now = *next;
      continue;
    }
    done[static_cast<std::size_t>(pick->id)] = 1;
    append_work(r.schedule, pick->id, now, now + 1);
    ++now;
    ++r.value;
  }
  r.schedule.leave_time = now;
  return r;
}

bool has_narrow_windows(const Instance& instance) {
  return std::all_of(instance.jobs.begin(), instance.jobs.end(),
                     [](const Job& j) { return j.deadline - j.arrival < 2 * j.length; });
}

SolveResult solve_narrow_window_dp(const Instance& instance, Objective objective) {
  require_nonpreemptive(instance, "narrow-window DP");
  for (const Job& j : instance.jobs) {
    if (j.deadline - j.arrival >= 2 * j.length) {
      throw PreconditionError("job " + std::to_string(j.id) + " has a window of at least twice its length");
    }
  }
  // Decision instants are bounded by max deadline; value and choice per instant.
  const Time horizon = instance.horizon();
  const std::size_t slots = static_cast<std::size_t>(horizon) + 2;
  std::vector<Time> value(slots, -1);
  std::vector<int> choice(slots, -1);  // job id, or -1 for idle/terminal

  // Instants are visited in decreasing order so successors are always solved.
  auto ready = [&](Time now) {
    std::vector<int> out;
    for (const Job& j : instance.jobs) {
      if (j.arrival <= now && now <= critical_time(j)) out.push_back(j.id);
    }
    return out;
  };
  for (Time now = horizon + 1; now >= 0; --now) {
    const std::size_t at = static_cast<std::size_t>(now);
    const std::vector<int> jobs = ready(now);
    if (jobs.empty()) {
      if (auto next = next_startable_arrival(instance, now)) {
        value[at] = value[static_cast<std::size_t>(*next)];
      } else {
        value[at] = objective == Objective::kMakespan ? now : 0;
      }
      continue;
    }
    Time best = kInfinity;
    for (int id : jobs) {
      const Job& j = instance.job(id);
      const Time v = step_cost(j, objective) + value[static_cast<std::size_t>(now + j.length)];
      if (v < best) {
        best = v;
        choice[at] = id;
      }
    }
    value[at] = best;
  }

  SolveResult r;
  r.value = value[0];
  Time now = 0;
  for (;;) {
    const int id = choice[static_cast<std::size_t>(now)];
    if (id < 0) {
      auto next = next_startable_arrival(instance, now);
      if (!next || !ready(now).empty()) break;
      now = *next;
      continue;
    }
    const Job& j = instance.job(id);
    append_work(r.schedule, id, now, now + j.length);
    now += j.length;
  }
  r.schedule.leave_time = now;
  return r;
}

RatioBounds infer_ratio_bounds(const Instance& instance) {
  RatioBounds b{Rational{1, 1}, Rational{1, 1}};
  Time min_t = 0, max_t = 0;
  for (const Job& j : instance.jobs) {
    if (j.degenerate()) continue;
    const Rational r{j.deadline - j.arrival + 1, j.length};
    if (less_ratio(b.window_ratio, r)) b.window_ratio = r;
    min_t = min_t == 0 ? j.length : std::min(min_t, j.length);
    max_t = std::max(max_t, j.length);
  }
  if (min_t > 0) b.length_ratio = Rational{max_t, min_t};
  return b;
}

SolveResult solve_bounded_ratio_dp(const Instance& instance, const RatioBounds& bounds,
                                   Objective objective, std::size_t max_states) {
  require_nonpreemptive(instance, "bounded-ratio DP");
  const Rational R = bounds.window_ratio, D = bounds.length_ratio;
  if (R.den <= 0 || D.den <= 0 || R.num <= 0 || D.num <= 0) {
    throw PreconditionError("ratio bounds must be positive");
  }
  if (instance.size() > 64) throw PreconditionError("bounded-ratio DP supports at most 64 jobs");
  Time min_t = 0, max_t = 0;
  for (const Job& j : instance.jobs) {
    if (j.degenerate()) continue;
    if (!less_ratio(Rational{j.deadline - j.arrival, 1}, Rational{R.num * j.length, R.den})) {
      throw PreconditionError("job " + std::to_string(j.id) + " violates d - a < R t");
    }
    min_t = min_t == 0 ? j.length : std::min(min_t, j.length);
    max_t = std::max(max_t, j.length);
  }
  if (min_t > 0 && less_ratio(D, Rational{max_t, min_t})) {
    throw PreconditionError("instance violates max t / min t <= Delta");
  }

  using Mask = std::uint64_t;
  auto bit = [](int id) { return Mask{1} << id; };
  // Executed jobs that are still inside their start window matter; the rest
  // can never be confused with an unexecuted available job.
  auto still_open = [&](Mask s, Time now) {
    Mask out = 0;
    for (const Job& j : instance.jobs) {
      if ((s & bit(j.id)) && critical_time(j) >= now) out |= bit(j.id);
    }
    return out;
  };
  auto ready = [&](Mask s, Time now) {
    std::vector<int> out;
    for (const Job& j : instance.jobs) {
      if (!(s & bit(j.id)) && j.arrival <= now && now <= critical_time(j)) out.push_back(j.id);
    }
    return out;
  };

  struct Entry {
    Time value;
    int choice;
  };
  std::map<std::pair<Time, Mask>, Entry> memo;

  auto solve = [&](auto&& self, Time now, Mask s) -> Time {
    const auto key = std::make_pair(now, s);
    if (auto it = memo.find(key); it != memo.end()) return it->second.value;
    if (memo.size() >= max_states) throw BudgetExceeded("bounded-ratio DP state budget exceeded");
    Entry e{kInfinity, -1};
    const std::vector<int> jobs = ready(s, now);
    if (jobs.empty()) {
      if (auto next = next_startable_arrival(instance, now)) {
        e.value = self(self, *next, still_open(s, *next));
      } else {
        e.value = objective == Objective::kMakespan ? now : 0;
      }
    } else {
      for (int id : jobs) {
        const Job& j = instance.job(id);
        const Time after = now + j.length;
        const Time v = step_cost(j, objective) + self(self, after, still_open(s | bit(id), after));
        if (v < e.value) e = Entry{v, id};
      }
    }
    memo[key] = e;
    return e.value;
  };

  SolveResult r;
  r.value = solve(solve, 0, 0);
  Time now = 0;
  Mask s = 0;
  for (;;) {
    const Entry& e = memo.at({now, s});
    if (e.choice < 0) {
      if (!ready(s, now).empty()) break;
      auto next = next_startable_arrival(instance, now);
      if (!next) break;
      now = *next;
      s = still_open(s, now);
      continue;
    }
    const Job& j = instance.job(e.choice);
    append_work(r.schedule, j.id, now, now + j.length);
    now += j.length;
    s = still_open(s | bit(j.id), now);
  }
  r.schedule.leave_time = now;
  return r;
}

SolveResult solve_common_release_dp(const Instance& instance, Objective objective) {
  require_nonpreemptive(instance, "common-release DP");
  if (instance.jobs.empty()) return {};
  const Time a0 = instance.jobs.front().arrival;
  for (const Job& j : instance.jobs) {
    if (j.arrival != a0) throw PreconditionError("common-release DP needs equal arrivals");
  }
  std::vector<const Job*> edd;
  Time total = 0;
  for (const Job& j : instance.jobs) {
    if (j.degenerate()) continue;
    edd.push_back(&j);
    total += j.length;
  }
  std::stable_sort(edd.begin(), edd.end(),
                   [](const Job* x, const Job* y) { return x->deadline < y->deadline; });
  const std::size_t n = edd.size();
  const std::size_t width = static_cast<std::size_t>(total) + 1;

  // cost[s]: least weight of an EDD-feasible subset of the first k jobs with
  // total length s, where every job still startable at a0 + end is included.
  // take[k][s] records whether job k was taken on the way to s.
  auto run = [&](Time end, std::vector<std::vector<char>>* take) {
    std::vector<Time> cost(width, kInfinity);
    cost[0] = 0;
    if (take) take->assign(n, std::vector<char>(width, 0));
    for (std::size_t k = 0; k < n; ++k) {
      const Job& j = *edd[k];
      const bool must = critical_time(j) >= a0 + end;
      const Time w = objective == Objective::kWeightedCompleted ? j.weight : 0;
      std::vector<Time> next(width, kInfinity);
      for (Time s = 0; s <= end; ++s) {
        const Time here = cost[static_cast<std::size_t>(s)];
        if (here >= kInfinity) continue;
        if (!must && here < next[static_cast<std::size_t>(s)]) {
          next[static_cast<std::size_t>(s)] = here;
          if (take) (*take)[k][static_cast<std::size_t>(s)] = 0;
        }
        const Time after = s + j.length;
        if (a0 + s <= critical_time(j) && after <= end && here + w < next[static_cast<std::size_t>(after)]) {
          next[static_cast<std::size_t>(after)] = here + w;
          if (take) (*take)[k][static_cast<std::size_t>(after)] = 1;
        }
      }
      cost = std::move(next);
    }
    return cost[static_cast<std::size_t>(end)];
  };

  Time best_value = kInfinity, best_end = -1;
  for (Time end = 0; end <= total; ++end) {
    const Time c = run(end, nullptr);
    if (c >= kInfinity) continue;
    Time v = c;
    if (objective == Objective::kTotalWork) v = end;
    if (objective == Objective::kMakespan) v = a0 + end;
    if (v < best_value) {
      best_value = v;
      best_end = end;
    }
  }
  if (best_end < 0) throw Error("common-release DP found no feasible schedule");

  std::vector<std::vector<char>> take;
  run(best_end, &take);
  std::vector<const Job*> chosen;
  Time s = best_end;
  for (std::size_t k = n; k-- > 0;) {
    if (take[k][static_cast<std::size_t>(s)]) {
      chosen.push_back(edd[k]);
      s -= edd[k]->length;
    }
  }
  std::reverse(chosen.begin(), chosen.end());
  SolveResult r;
  r.value = best_value;
  Time now = a0;
  for (const Job* j : chosen) {
    append_work(r.schedule, j->id, now, now + j->length);
    now += j->length;
  }
  r.schedule.leave_time = now;
  return r;
}

}  // namespace lbp
