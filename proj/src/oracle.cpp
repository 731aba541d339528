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

#include "lbp/oracle.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "lbp/feasibility.hpp"

namespace lbp {
namespace {

constexpr int kTerminal = -2;
constexpr int kIdle = -1;

struct Move {
  int job = kTerminal;
  ExecState next;
  Time cost = 0;
};

// A started job that can no longer finish breaks the completion obligation.
bool violates_completion(const Instance& inst, const ExecState& s) {
  if (inst.regime != Regime::kPreemptIII) return false;
  for (const Job& j : inst.jobs) {
    const Time d = s.done_of(j.id);
    if (d > 0 && d < j.length && d + (j.deadline - s.now) < j.length) return true;
  }
  return false;
}

// Successors of a decision point. Nonpreemptive moves run a whole job;
// preemptive moves run one slot. An empty executable set yields a single idle
// jump to the next executable instant, or a terminal move.
std::vector<Move> expand(const Instance& inst, Objective obj, const ExecState& s) {
  std::vector<Move> moves;
  const std::vector<int> ready = executable_set(inst, s);
  if (ready.empty()) {
    if (auto t = next_executable_time(inst, s)) {
      Move m{kIdle, s, 0};
      m.next.now = *t;
      moves.push_back(std::move(m));
    } else {
      moves.push_back(Move{kTerminal, s, obj == Objective::kMakespan ? s.now : 0});
    }
    return moves;
  }
  const bool whole = inst.regime == Regime::kNonpreemptive;
  for (int j : ready) {
    const Job& job = inst.job(j);
    Move m{j, s, 0};
    const Time run = whole ? job.length : 1;
    m.next.now += run;
    Time& done = m.next.done[static_cast<std::size_t>(j)];
    done += run;
    switch (obj) {
      case Objective::kTotalWork: m.cost = run; break;
      case Objective::kWeightedCompleted: m.cost = done == job.length ? job.weight : 0; break;
      case Objective::kMakespan: m.cost = 0; break;
    }
    if (violates_completion(inst, m.next)) continue;
    moves.push_back(std::move(m));
  }
  return moves;
}

struct KeyHash {
  std::size_t operator()(const std::vector<Time>& v) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (Time x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

std::vector<Time> key_of(const ExecState& s) {
  std::vector<Time> k;
  k.reserve(s.done.size() + 1);
  k.push_back(s.now);
  k.insert(k.end(), s.done.begin(), s.done.end());
  return k;
}

void apply_to_schedule(Schedule& out, const ExecState& from, const Move& m) {
  if (m.job >= 0) append_work(out, m.job, from.now, m.next.now);
}

class Search {
 public:
  Search(const Instance& inst, Objective obj, const OracleLimits& limits)
      : inst_(inst), obj_(obj), limits_(limits) {}

  OracleResult run() {
    const ExecState start = ExecState::initial(inst_);
    OracleResult r;
    if (limits_.memoize) {
      r.optimum = solve(start);
      if (r.optimum >= kInfinity) throw Error("oracle found no feasible schedule");
      r.witness = rebuild(start);
    } else {
      best_ = kInfinity;
      std::vector<Move> path;
      dfs(start, 0, path);
      if (best_ >= kInfinity) throw Error("oracle found no feasible schedule");
      r.optimum = best_;
      r.witness = best_schedule_;
    }
    r.states = states_;
    return r;
  }

 private:
  struct Entry {
    Time value;
    int choice;  // index into expand() output
  };

  void count_state() {
    if (++states_ > limits_.max_states) throw BudgetExceeded("oracle state budget exceeded");
  }

  Time solve(const ExecState& s) {
    auto key = key_of(s);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second.value;
    count_state();
    const std::vector<Move> moves = expand(inst_, obj_, s);
    Entry e{kInfinity, -1};
    for (std::size_t i = 0; i < moves.size(); ++i) {
      const Move& m = moves[i];
      Time v = m.cost;
      if (m.job != kTerminal) {
        const Time sub = solve(m.next);
        v = sub >= kInfinity ? kInfinity : v + sub;
      } else if (violates_completion_at_end(m.next)) {
        v = kInfinity;
      }
      if (v < e.value) e = Entry{v, static_cast<int>(i)};
    }
    memo_.emplace(std::move(key), e);
    return e.value;
  }

  bool violates_completion_at_end(const ExecState& s) const {
    if (inst_.regime != Regime::kPreemptIII) return false;
    for (const Job& j : inst_.jobs) {
      const Time d = s.done_of(j.id);
      if (d > 0 && d < j.length) return true;
    }
    return false;
  }

  Schedule rebuild(ExecState s) {
    Schedule out;
    for (;;) {
      const Entry& e = memo_.at(key_of(s));
      const std::vector<Move> moves = expand(inst_, obj_, s);
      const Move& m = moves[static_cast<std::size_t>(e.choice)];
      if (m.job == kTerminal) {
        out.leave_time = s.now;
        return out;
      }
      apply_to_schedule(out, s, m);
      s = m.next;
    }
  }

  void dfs(const ExecState& s, Time cost, std::vector<Move>& path) {
    count_state();
    const Time bound = cost + (obj_ == Objective::kMakespan ? s.now : 0);
    if (limits_.prune && bound >= best_) return;
    for (const Move& m : expand(inst_, obj_, s)) {
      if (m.job == kTerminal) {
        if (violates_completion_at_end(m.next)) continue;
        const Time v = cost + m.cost;
        if (v < best_) {
          best_ = v;
          best_schedule_ = Schedule{};
          ExecState cur = ExecState::initial(inst_);
          for (const Move& step : path) {
            apply_to_schedule(best_schedule_, cur, step);
            cur = step.next;
          }
          best_schedule_.leave_time = s.now;
        }
        continue;
      }
      path.push_back(m);
      dfs(m.next, cost + m.cost, path);
      path.pop_back();
    }
  }

  const Instance& inst_;
  Objective obj_;
  OracleLimits limits_;
  std::size_t states_ = 0;
  std::unordered_map<std::vector<Time>, Entry, KeyHash> memo_;
  Time best_ = kInfinity;
  Schedule best_schedule_;
};

void check_limits(const Instance& inst, const OracleLimits& limits) {
  check_instance(inst);
  if (inst.size() > limits.max_jobs) {
    throw BudgetExceeded("oracle limit: " + std::to_string(inst.size()) + " jobs > " +
                         std::to_string(limits.max_jobs));
  }
  if (inst.horizon() > limits.max_horizon) {
    throw BudgetExceeded("oracle limit: horizon " + std::to_string(inst.horizon()) + " > " +
                         std::to_string(limits.max_horizon));
  }
}

}  // namespace

OracleResult oracle_nonpreemptive(const Instance& instance, Objective objective,
                                  const OracleLimits& limits) {
  if (instance.regime != Regime::kNonpreemptive) {
    throw PreconditionError("oracle_nonpreemptive needs the nonpreemptive regime");
  }
  check_limits(instance, limits);
  return Search(instance, objective, limits).run();
}

OracleResult oracle_preemptive(const Instance& instance, Objective objective,
                               const OracleLimits& limits) {
  if (instance.regime == Regime::kNonpreemptive) {
    throw PreconditionError("oracle_preemptive needs a preemptive regime");
  }
  check_limits(instance, limits);
  return Search(instance, objective, limits).run();
}

OracleResult oracle_optimize(const Instance& instance, Objective objective) {
  if (instance.regime == Regime::kNonpreemptive) return oracle_nonpreemptive(instance, objective);
  return oracle_preemptive(instance, objective);
}

namespace {

class LeaveSearch {
 public:
  LeaveSearch(const Instance& inst, Time leave, std::size_t max_states)
      : inst_(inst), leave_(leave), max_states_(max_states) {}

  std::optional<Schedule> run() {
    std::vector<Move> path;
    const ExecState start = ExecState::initial(inst_);
    if (!dfs(start, path)) return std::nullopt;
    Schedule out;
    ExecState cur = start;
    for (const Move& m : path) {
      apply_to_schedule(out, cur, m);
      cur = m.next;
    }
    out.leave_time = leave_;
    return out;
  }

 private:
  bool finished_ok(const ExecState& s) const {
    if (inst_.regime == Regime::kPreemptIII) {
      for (const Job& j : inst_.jobs) {
        const Time d = s.done_of(j.id);
        if (d > 0 && d < j.length) return false;
      }
    }
    ExecState at = s;
    at.now = leave_;
    return can_leave(inst_, at);
  }

  // Work that must still happen before `leave_`: jobs that would otherwise be
  // executable at or after the leave time. More work never relaxes this.
  Time committed_work(const ExecState& s) const {
    ExecState at = s;
    at.now = std::max(s.now, leave_);
    Time sum = 0;
    for (const Job& j : inst_.jobs) {
      const Time d = s.done_of(j.id);
      if (d < j.length && earliest_executable_time(inst_, at, j.id)) sum += j.length - d;
    }
    return sum;
  }

  bool dfs(const ExecState& s, std::vector<Move>& path) {
    if (s.now > leave_) return false;
    if (s.now == leave_) return finished_ok(s);
    if (s.now + committed_work(s) > leave_) return false;
    auto key = key_of(s);
    if (dead_.contains(key)) return false;
    if (++states_ > max_states_) throw BudgetExceeded("leave-time search budget exceeded");
    for (const Move& m : expand(inst_, Objective::kTotalWork, s)) {
      if (m.job == kTerminal) {
        if (finished_ok(s)) return true;
        continue;
      }
      path.push_back(m);
      if (dfs(m.next, path)) return true;
      path.pop_back();
    }
    dead_.insert(std::move(key));
    return false;
  }

  const Instance& inst_;
  Time leave_;
  std::size_t max_states_;
  std::size_t states_ = 0;
  std::unordered_set<std::vector<Time>, KeyHash> dead_;
};

}  // namespace

std::optional<Schedule> oracle_leave_exactly(const Instance& instance, Time leave,
                                             std::size_t max_states) {
  check_instance(instance);
  if (leave < 0) return std::nullopt;
  return LeaveSearch(instance, leave, max_states).run();
}

bool subset_sum_reachable(std::span<const Time> values, Time target) {
  if (target < 0) return false;
  std::vector<char> reach(static_cast<std::size_t>(target) + 1, 0);
  reach[0] = 1;
  for (Time v : values) {
    if (v < 0) throw PreconditionError("subset sum values must be nonnegative");
    for (Time s = target; s >= v; --s) {
      if (reach[static_cast<std::size_t>(s - v)]) reach[static_cast<std::size_t>(s)] = 1;
    }
  }
  return reach[static_cast<std::size_t>(target)] != 0;
}

}  // namespace lbp
