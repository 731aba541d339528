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

#include "lbp/gadgets.hpp"

#include <algorithm>
#include <random>

#include "lbp/oracle.hpp"

namespace lbp {
namespace {

Time checked_sum(std::span<const Time> values) {
  Time sum = 0;
  for (Time v : values) {
    if (v <= 0) throw PreconditionError("gadget values must be positive");
    sum += v;
  }
  return sum;
}

void add(Instance& inst, Time arrival, Time deadline, Time length) {
  inst.jobs.push_back(make_job(static_cast<int>(inst.jobs.size()), arrival, deadline, length));
}

int check_triples(std::span<const Time> values, Time bound) {
  if (values.empty() || values.size() % 3 != 0) {
    throw PreconditionError("3-partition needs 3m values");
  }
  if (bound <= 0) throw PreconditionError("3-partition bound must be positive");
  const int m = static_cast<int>(values.size() / 3);
  if (checked_sum(values) != m * bound) throw PreconditionError("values must sum to m*B");
  for (Time v : values) {
    if (4 * v < bound || 2 * v > bound) throw PreconditionError("values must lie in [B/4, B/2]");
  }
  return m;
}

bool search_triples(std::span<const Time> values, Time bound, std::vector<char>& used,
                    std::vector<std::array<int, 3>>& out) {
  const int n = static_cast<int>(values.size());
  int first = 0;
  while (first < n && used[static_cast<std::size_t>(first)]) ++first;
  if (first == n) return true;
  used[static_cast<std::size_t>(first)] = 1;
  for (int j = first + 1; j < n; ++j) {
    if (used[static_cast<std::size_t>(j)]) continue;
    used[static_cast<std::size_t>(j)] = 1;
    for (int k = j + 1; k < n; ++k) {
      if (used[static_cast<std::size_t>(k)]) continue;
      if (values[static_cast<std::size_t>(first)] + values[static_cast<std::size_t>(j)] +
              values[static_cast<std::size_t>(k)] !=
          bound) {
        continue;
      }
      used[static_cast<std::size_t>(k)] = 1;
      out.push_back({first, j, k});
      if (search_triples(values, bound, used, out)) return true;
      out.pop_back();
      used[static_cast<std::size_t>(k)] = 0;
    }
    used[static_cast<std::size_t>(j)] = 0;
  }
  used[static_cast<std::size_t>(first)] = 0;
  return false;
}

}  // namespace

SubsetSumGadget gen_subset_sum_nonpreemptive(std::span<const Time> values, Time target) {
  const Time sum = checked_sum(values);
  if (target < 0 || target > sum) throw PreconditionError("target must lie in [0, sum]");
  SubsetSumGadget g;
  g.instance.regime = Regime::kNonpreemptive;
  for (Time v : values) add(g.instance, 0, target, v);
  const Time long_length = 1 + sum;
  g.long_job = g.instance.size();
  add(g.instance, 0, target + long_length - 1, long_length);
  g.reachable = subset_sum_reachable(values, target);
  return g;
}

ThreePartitionGadget gen_3partition(std::span<const Time> values, Time bound) {
  const int m = check_triples(values, bound);
  ThreePartitionGadget g;
  g.m = m;
  g.bound = bound;
  g.instance.regime = Regime::kNonpreemptive;
  const Time element_deadline = (m - 1) + m * bound;
  for (Time v : values) add(g.instance, 0, element_deadline, v);
  for (int i = 1; i < m; ++i) add(g.instance, i * (bound + 1) - 1, i * (bound + 1), 1);
  const Time large = m * bound + m;
  g.large_job = g.instance.size();
  add(g.instance, 0, large + (m - 2) + m * bound, large);
  return g;
}

Schedule canonical_schedule(const ThreePartitionGadget& gadget,
                            std::span<const std::array<int, 3>> triples) {
  if (static_cast<int>(triples.size()) != gadget.m) {
    throw PreconditionError("need one triple per window");
  }
  const int elements = 3 * gadget.m;
  std::vector<char> seen(static_cast<std::size_t>(elements), 0);
  Schedule s;
  for (int i = 0; i < gadget.m; ++i) {
    Time cur = i * (gadget.bound + 1);
    Time used = 0;
    for (int e : triples[static_cast<std::size_t>(i)]) {
      if (e < 0 || e >= elements || seen[static_cast<std::size_t>(e)]) {
        throw PreconditionError("triples must partition the elements");
      }
      seen[static_cast<std::size_t>(e)] = 1;
      const Time len = gadget.instance.job(e).length;
      s.segments.push_back({e, cur, cur + len});
      cur += len;
      used += len;
    }
    if (used != gadget.bound) throw PreconditionError("triple does not sum to B");
    if (i + 1 < gadget.m) s.segments.push_back({elements + i, cur, cur + 1});
  }
  s.leave_time = gadget.m * (gadget.bound + 1) - 1;
  return s;
}

std::optional<std::vector<std::array<int, 3>>> find_3partition(std::span<const Time> values,
                                                               Time bound) {
  if (values.size() % 3 != 0) return std::nullopt;
  std::vector<char> used(values.size(), 0);
  std::vector<std::array<int, 3>> out;
  if (search_triples(values, bound, used, out)) return out;
  return std::nullopt;
}

Instance gen_bounded_delta(std::span<const Time> values, Time bound, Time delta) {
  if (bound % 12 != 0) throw PreconditionError("B must be divisible by 12");
  if (delta < 2) throw PreconditionError("Delta must be at least 2");
  const int m = check_triples(values, bound);
  const Time sep = bound / 3;
  const Time quarter = bound / 4;
  Instance inst;
  inst.regime = Regime::kNonpreemptive;
  const Time element_deadline = m * bound + (m - 1) * sep;
  for (Time v : values) add(inst, 0, element_deadline, v);
  for (int i = 1; i < m; ++i) {
    const Time end = i * (bound + sep);
    add(inst, end - sep, end, sep);
  }
  Time arrival = element_deadline - 1;
  for (int i = 0; i < m; ++i) {
    const Time l_end = arrival + delta * quarter;
    add(inst, arrival, l_end, delta * quarter);
    add(inst, l_end - 1, l_end - 1 + quarter, quarter);
    arrival = l_end;
  }
  return inst;
}

Instance gen_preempt2_subset_sum(std::span<const Time> values, Time target) {
  checked_sum(values);
  if (target <= 0) throw PreconditionError("target must be positive");
  const Time q = 3 * static_cast<Time>(values.size());
  Instance inst;
  inst.regime = Regime::kPreemptII;
  inst.scale = q;
  for (Time v : values) add(inst, 0, q * (target + v) - 1, q * v);
  const Time long_length = q * (target + 1);
  add(inst, 0, q * target - 2 + long_length, long_length);
  return inst;
}

Instance gen_limiting_example(int n) {
  if (n < 3) throw PreconditionError("the limiting example needs n >= 3");
  Instance inst;
  inst.regime = Regime::kPreemptII;
  for (int i = 0; i + 1 < n; ++i) add(inst, 0, 100, 51);
  add(inst, 0, 100, 48);
  return inst;
}

std::string_view to_string(Profile profile) {
  switch (profile) {
    case Profile::kGeneral: return "general";
    case Profile::kNarrowWindow: return "narrow";
    case Profile::kCommonArrival: return "common-arrival";
    case Profile::kCommonDeadline: return "common-deadline";
    case Profile::kUnitLength: return "unit";
  }
  return "general";
}

std::optional<Profile> parse_profile(std::string_view text) {
  for (Profile p : {Profile::kGeneral, Profile::kNarrowWindow, Profile::kCommonArrival,
                    Profile::kCommonDeadline, Profile::kUnitLength}) {
    if (text == to_string(p)) return p;
  }
  if (text == "narrow-window") return Profile::kNarrowWindow;
  if (text == "unit-length") return Profile::kUnitLength;
  return std::nullopt;
}

Instance gen_random(int n, Time horizon, Regime regime, Profile profile, std::uint64_t seed) {
  if (n < 0) throw PreconditionError("n must be nonnegative");
  if (horizon < 1) throw PreconditionError("K must be at least 1");
  std::mt19937_64 rng(seed);
  auto uniform = [&](Time lo, Time hi) {  // inclusive
    return std::uniform_int_distribution<Time>(lo, hi)(rng);
  };
  Instance inst;
  inst.regime = regime;
  for (int i = 0; i < n; ++i) {
    Time a = 0;
    Time t = 1;
    Time d = horizon;
    switch (profile) {
      case Profile::kGeneral:
        a = uniform(0, horizon - 1);
        t = uniform(1, horizon - a);
        d = uniform(a + t, horizon);
        break;
      case Profile::kNarrowWindow:
        a = uniform(0, horizon - 1);
        t = uniform(1, horizon - a);
        d = uniform(a + t, std::min(horizon, a + 2 * t - 1));
        break;
      case Profile::kCommonArrival:
        t = uniform(1, horizon);
        d = uniform(t, horizon);
        break;
      case Profile::kCommonDeadline:
        a = uniform(0, horizon - 1);
        t = uniform(1, horizon - a);
        break;
      case Profile::kUnitLength:
        a = uniform(0, horizon - 1);
        d = uniform(a + 1, horizon);
        break;
    }
    add(inst, a, d, t);
  }
  return inst;
}

}  // namespace lbp
