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

#include "lbp/exact.hpp"
#include "lbp/feasibility.hpp"
#include "lbp/gadgets.hpp"
#include "lbp/oracle.hpp"
#include "support.hpp"

using namespace lbp;
using lbp::test::make;
using lbp::test::worked_example;

namespace {

constexpr Objective kAll[] = {Objective::kTotalWork, Objective::kWeightedCompleted, Objective::kMakespan};

// Schedule is feasible and attains the reported value.
void check_result(const Instance& inst, const SolveResult& r, Objective o) {
  CHECK(validate(inst, r.schedule).empty());
  CHECK(evaluate(inst, r.schedule, o) == r.value);
}

Time oracle(const Instance& inst, Objective o) { return oracle_optimize(inst, o).optimum; }

}  // namespace

TEST_CASE("unit jobs, latest deadline first") {
  const Instance expire = make(Regime::kNonpreemptive, {{0, 1, 1}, {0, 3, 1}});
  const SolveResult r = solve_unit_ldd(expire);
  CHECK(r.value == 1);
  CHECK(r.schedule.segments == std::vector<Segment>{{1, 0, 1}});
  check_result(expire, r, Objective::kTotalWork);

  CHECK(solve_unit_ldd(make(Regime::kNonpreemptive, {{0, 5, 1}})).value == 1);
  CHECK(solve_unit_ldd(make(Regime::kNonpreemptive, {{0, 2, 1}, {1, 2, 1}})).value == 2);
  CHECK_THROWS_AS(solve_unit_ldd(make(Regime::kNonpreemptive, {{0, 5, 2}})), PreconditionError);
  CHECK_THROWS_AS(solve_unit_ldd(make(Regime::kPreemptI, {{0, 5, 1}})), PreconditionError);
}

TEST_CASE("narrow windows") {
  const Instance skip = make(Regime::kNonpreemptive, {{0, 3, 2}, {0, 5, 3}});
  const SolveResult r = solve_narrow_window_dp(skip, Objective::kTotalWork);
  CHECK(r.value == 3);
  check_result(skip, r, Objective::kTotalWork);

  CHECK(solve_narrow_window_dp(make(Regime::kNonpreemptive, {{0, 7, 4}}), Objective::kTotalWork).value == 4);
  const Instance forced = make(Regime::kNonpreemptive, {{0, 5, 3}, {2, 5, 2}});
  CHECK(solve_narrow_window_dp(forced, Objective::kTotalWork).value == 5);
  CHECK_THROWS_AS(solve_narrow_window_dp(make(Regime::kNonpreemptive, {{0, 4, 2}}), Objective::kTotalWork),
                  PreconditionError);
}

TEST_CASE("narrow windows fix the order of every pair") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Instance inst = gen_random(6, 20, Regime::kNonpreemptive, Profile::kNarrowWindow, seed);
    REQUIRE(has_narrow_windows(inst));
    for (const Job& a : inst.jobs) {
      for (const Job& b : inst.jobs) {
        if (a.id != b.id) CHECK_FALSE((can_precede(a, b) && can_precede(b, a)));
      }
    }
  }
}

TEST_CASE("bounded ratio") {
  const Instance inst = make(Regime::kNonpreemptive, {{0, 5, 2}, {0, 10, 4}, {4, 9, 2}});
  const RatioBounds b = infer_ratio_bounds(inst);
  CHECK(to_string(b.window_ratio) == "3");
  CHECK(to_string(b.length_ratio) == "2");
  for (Objective o : kAll) {
    const SolveResult r = solve_bounded_ratio_dp(inst, b, o);
    check_result(inst, r, o);
    CHECK(r.value == oracle(inst, o));
  }
  CHECK(solve_bounded_ratio_dp(make(Regime::kNonpreemptive, {{1, 9, 3}}),
                               RatioBounds{{3, 1}, {1, 1}}, Objective::kTotalWork)
            .value == 3);
  CHECK_THROWS_AS(solve_bounded_ratio_dp(inst, RatioBounds{{2, 1}, {2, 1}}, Objective::kTotalWork),
                  PreconditionError);
  CHECK_THROWS_AS(solve_bounded_ratio_dp(inst, b, Objective::kTotalWork, 2), BudgetExceeded);
}

TEST_CASE("bounded ratio specializes to narrow windows") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = gen_random(6, 16, Regime::kNonpreemptive, Profile::kNarrowWindow, seed);
    for (Objective o : kAll) {
      CHECK(solve_bounded_ratio_dp(inst, infer_ratio_bounds(inst), o).value ==
            solve_narrow_window_dp(inst, o).value);
    }
  }
}

TEST_CASE("common release") {
  const std::vector<Time> yes{1, 2};
  const SubsetSumGadget a = gen_subset_sum_nonpreemptive(yes, 3);
  const SolveResult ra = solve_common_release_dp(a.instance, Objective::kTotalWork);
  CHECK(ra.value == 3);
  CHECK(executed_amounts(a.instance, ra.schedule)[static_cast<std::size_t>(a.long_job)] == 0);
  check_result(a.instance, ra, Objective::kTotalWork);

  // Same construction for {2} and target 3, written out since 3 exceeds the sum.
  const Instance b = make(Regime::kNonpreemptive, {{0, 3, 2}, {0, 8, 6}});
  // Running the long job first lets the short one expire.
  CHECK(solve_common_release_dp(b, Objective::kTotalWork).value == 6);
  CHECK(oracle(b, Objective::kTotalWork) == 6);
  CHECK(solve_common_release_dp(make(Regime::kNonpreemptive, {{0, 9, 5}}), Objective::kMakespan).value == 5);
  CHECK_THROWS_AS(solve_common_release_dp(make(Regime::kNonpreemptive, {{0, 9, 5}, {1, 9, 1}}),
                                          Objective::kTotalWork),
                  PreconditionError);
}

TEST_CASE("objectives coincide at common release") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const Instance inst = gen_random(6, 14, Regime::kNonpreemptive, Profile::kCommonArrival, seed);
    const Time work = solve_common_release_dp(inst, Objective::kTotalWork).value;
    CHECK(solve_common_release_dp(inst, Objective::kMakespan).value == work);
    CHECK(solve_common_release_dp(inst, Objective::kWeightedCompleted).value == work);
  }
}

TEST_CASE("in-window preemption, latest deadline first") {
  const SolveResult w = solve_preempt1_ldd(worked_example(Regime::kPreemptI), Objective::kTotalWork);
  CHECK(w.value == 10);
  CHECK(w.value == oracle(worked_example(Regime::kPreemptI), Objective::kTotalWork));

  const Instance single = make(Regime::kPreemptI, {{0, 5, 3}});
  const SolveResult s = solve_preempt1_ldd(single, Objective::kMakespan);
  CHECK(s.value == 3);
  CHECK(s.schedule.leave_time == 3);

  const Instance pair = make(Regime::kPreemptI, {{0, 5, 5}, {0, 10, 1}});
  const SolveResult p = solve_preempt1_ldd(pair, Objective::kTotalWork);
  CHECK(p.value == 5);
  CHECK(p.schedule.segments.front() == Segment{1, 0, 1});
  CHECK(oracle(pair, Objective::kTotalWork) == 5);
  CHECK_THROWS_AS(solve_preempt1_ldd(pair, Objective::kWeightedCompleted), PreconditionError);
  CHECK_THROWS_AS(solve_preempt1_ldd(worked_example(), Objective::kTotalWork), PreconditionError);
}

TEST_CASE("in-window preemption, completed weight") {
  const Instance pair = make(Regime::kPreemptI, {{0, 3, 3}, {0, 6, 3}}, 6);
  const SolveResult r = solve_preempt1_min_weight(pair);
  // The first job fills its window, and any time taken from it goes to the second.
  CHECK(r.value == 3);
  CHECK(r.value == oracle_preemptive(pair, Objective::kWeightedCompleted).optimum);
  check_result(pair, r, Objective::kWeightedCompleted);

  const Instance tight = make(Regime::kPreemptI, {{0, 4, 4}}, 3);
  CHECK(solve_preempt1_min_weight(tight).value == 4);
  CHECK(oracle_preemptive(tight, Objective::kWeightedCompleted).optimum == 4);

  Instance empty;
  empty.regime = Regime::kPreemptI;
  CHECK(solve_preempt1_min_weight(empty).value == 0);
  CHECK_THROWS_AS(solve_preempt1_min_weight(make(Regime::kPreemptI, {{0, 4, 4}, {0, 9, 2}}, 5)),
                  PreconditionError);
}

TEST_CASE("solvers match the oracle on random corpora") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const int n = 2 + static_cast<int>(seed % 5);
    const Time k = 6 + static_cast<Time>(seed % 8);
    const Instance unit = gen_random(n, k, Regime::kNonpreemptive, Profile::kUnitLength, seed);
    const SolveResult u = solve_unit_ldd(unit);
    check_result(unit, u, Objective::kTotalWork);
    CHECK(u.value == oracle(unit, Objective::kTotalWork));

    const Instance general = gen_random(n, k, Regime::kNonpreemptive, Profile::kGeneral, seed);
    const Instance release = gen_random(n, k, Regime::kNonpreemptive, Profile::kCommonArrival, seed);
    const Instance p1 = gen_random(n, k, Regime::kPreemptI, Profile::kGeneral, seed);
    for (Objective o : kAll) {
      const SolveResult g = solve_bounded_ratio_dp(general, infer_ratio_bounds(general), o);
      check_result(general, g, o);
      CHECK(g.value == oracle(general, o));
      const SolveResult c = solve_common_release_dp(release, o);
      check_result(release, c, o);
      CHECK(c.value == oracle(release, o));
      if (o == Objective::kWeightedCompleted) continue;
      const SolveResult l = solve_preempt1_ldd(p1, o);
      check_result(p1, l, o);
      CHECK(l.value == oracle(p1, o));
    }
  }
}
