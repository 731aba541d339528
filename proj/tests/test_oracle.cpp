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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <vector>

#include "lbp/feasibility.hpp"
#include "lbp/gadgets.hpp"
#include "lbp/oracle.hpp"
#include "support.hpp"

using namespace lbp;
using lbp::test::make;
using lbp::test::worked_example;

namespace {

constexpr Objective kAll[] = {Objective::kTotalWork, Objective::kWeightedCompleted, Objective::kMakespan};

Instance reversed(const Instance& inst) {
  Instance out = inst;
  std::reverse(out.jobs.begin(), out.jobs.end());
  for (std::size_t i = 0; i < out.jobs.size(); ++i) out.jobs[i].id = static_cast<int>(i);
  return out;
}

}  // namespace

TEST_CASE("subset-sum gadget optima") {
  const std::vector<Time> yes{1, 2, 3};
  const SubsetSumGadget a = gen_subset_sum_nonpreemptive(yes, 3);
  const OracleResult ra = oracle_nonpreemptive(a.instance, Objective::kTotalWork);
  CHECK(ra.optimum == 3);
  CHECK(executed_amounts(a.instance, ra.witness)[static_cast<std::size_t>(a.long_job)] == 0);

  const std::vector<Time> no{2, 4};
  const SubsetSumGadget b = gen_subset_sum_nonpreemptive(no, 3);
  const OracleResult rb = oracle_nonpreemptive(b.instance, Objective::kTotalWork);
  // The 4-job cannot fit before 3, so the cheapest escape is the long job alone.
  CHECK(rb.optimum == 7);
  CHECK(executed_amounts(b.instance, rb.witness)[static_cast<std::size_t>(b.long_job)] == 7);

  const Instance single = make(Regime::kNonpreemptive, {{0, 9, 4}});
  CHECK(oracle_nonpreemptive(single, Objective::kTotalWork).optimum == 4);
}

TEST_CASE("worked example under each objective") {
  const Instance inst = worked_example();
  CHECK(oracle_preemptive(inst, Objective::kMakespan).optimum == 9);
  CHECK(oracle_preemptive(inst, Objective::kTotalWork).optimum == 4);
  // Slivers of all three jobs leave only the first one completed:
  // 1 on [0,7), 0 on [7,8), 2 on [8,9), 0 on [9,10).
  CHECK(oracle_preemptive(inst, Objective::kWeightedCompleted).optimum == 2);
  // In-window executability keeps the 9-job alive until its deadline.
  CHECK(oracle_preemptive(worked_example(Regime::kPreemptI), Objective::kTotalWork).optimum == 10);
}

TEST_CASE("leave exactly") {
  const Instance inst = worked_example();
  const auto nine = oracle_leave_exactly(inst, 9);
  REQUIRE(nine.has_value());
  CHECK(validate(inst, *nine).empty());
  CHECK(nine->leave_time == 9);
  CHECK_FALSE(oracle_leave_exactly(inst, 8).has_value());
  CHECK(oracle_leave_exactly(inst, 10).has_value());
}

TEST_CASE("completion-obligation matches no preemption at common arrival") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Instance np = gen_random(4, 10, Regime::kNonpreemptive, Profile::kCommonArrival, seed);
    Instance p3 = np;
    p3.regime = Regime::kPreemptIII;
    for (Objective o : kAll) {
      CHECK(oracle_nonpreemptive(np, o).optimum == oracle_preemptive(p3, o).optimum);
    }
  }
}

TEST_CASE("witnesses validate and attain the optimum") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    for (Regime r : {Regime::kNonpreemptive, Regime::kPreemptI, Regime::kPreemptII, Regime::kPreemptIII}) {
      const Instance inst = gen_random(5, 12, r, Profile::kGeneral, seed);
      for (Objective o : kAll) {
        const OracleResult res = oracle_optimize(inst, o);
        CHECK(validate(inst, res.witness).empty());
        CHECK(evaluate(inst, res.witness, o) == res.optimum);
      }
    }
  }
}

TEST_CASE("search variants agree") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    for (Regime r : {Regime::kNonpreemptive, Regime::kPreemptI, Regime::kPreemptII, Regime::kPreemptIII}) {
      const Instance inst = gen_random(4, 9, r, Profile::kGeneral, seed);
      for (Objective o : kAll) {
        const Time memo = oracle_optimize(inst, o).optimum;
        OracleLimits dfs = OracleLimits::unlimited();
        dfs.memoize = false;
        dfs.prune = true;
        OracleLimits plain = dfs;
        plain.prune = false;
        const bool np = r == Regime::kNonpreemptive;
        CHECK((np ? oracle_nonpreemptive(inst, o, dfs) : oracle_preemptive(inst, o, dfs)).optimum == memo);
        CHECK((np ? oracle_nonpreemptive(inst, o, plain) : oracle_preemptive(inst, o, plain)).optimum == memo);
      }
    }
  }
}

TEST_CASE("optima ignore input order") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    for (Regime r : {Regime::kNonpreemptive, Regime::kPreemptII}) {
      const Instance inst = gen_random(5, 11, r, Profile::kGeneral, seed);
      for (Objective o : kAll) {
        CHECK(oracle_optimize(inst, o).optimum == oracle_optimize(reversed(inst), o).optimum);
      }
    }
  }
}

TEST_CASE("doubling the grid doubles work and makespan under in-window rules") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Instance inst = gen_random(3, 8, Regime::kPreemptI, Profile::kGeneral, seed);
    const Instance fine = scaled(inst, 2);
    for (Objective o : {Objective::kTotalWork, Objective::kMakespan}) {
      CHECK(oracle_preemptive(fine, o, OracleLimits::unlimited()).optimum ==
            2 * oracle_preemptive(inst, o).optimum);
    }
  }
}

TEST_CASE("limits are enforced") {
  const Instance big = gen_random(8, 30, Regime::kPreemptI, Profile::kGeneral, 3);
  CHECK_THROWS_AS(oracle_preemptive(big, Objective::kTotalWork), BudgetExceeded);
  const Instance many = gen_random(11, 20, Regime::kNonpreemptive, Profile::kGeneral, 3);
  CHECK_THROWS_AS(oracle_nonpreemptive(many, Objective::kTotalWork), BudgetExceeded);
  OracleLimits tiny = OracleLimits::unlimited(10);
  const Instance mid = gen_random(5, 20, Regime::kPreemptI, Profile::kCommonArrival, 4);
  CHECK_THROWS_AS(oracle_preemptive(mid, Objective::kTotalWork, tiny), BudgetExceeded);
  CHECK_THROWS_AS(oracle_preemptive(worked_example(Regime::kNonpreemptive), Objective::kTotalWork),
                  PreconditionError);
}

TEST_CASE("subset-sum table") {
  const std::vector<Time> a{1, 2, 3}, b{2, 4}, c{51, 51, 51, 48};
  CHECK(subset_sum_reachable(a, 3));
  CHECK_FALSE(subset_sum_reachable(b, 3));
  CHECK_FALSE(subset_sum_reachable(c, 100));
  CHECK(subset_sum_reachable(c, 99));
  CHECK(subset_sum_reachable(b, 0));
}

TEST_CASE("table agrees with enumeration") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 200; ++round) {
    std::vector<Time> v(rng() % 6);
    for (Time& x : v) x = 1 + static_cast<Time>(rng() % 9);
    const Time target = static_cast<Time>(rng() % 25);
    bool found = false;
    for (std::size_t mask = 0; mask < (std::size_t{1} << v.size()); ++mask) {
      Time sum = 0;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (mask >> i & 1) sum += v[i];
      }
      found = found || sum == target;
    }
    CHECK(subset_sum_reachable(v, target) == found);
  }
}
