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

#include "lbp/core.hpp"
#include "lbp/io.hpp"
#include "support.hpp"

using namespace lbp;
using lbp::test::make;
using lbp::test::schedule;
using lbp::test::worked_example;

TEST_CASE("critical time") {
  CHECK(critical_time(make_job(0, 0, 10, 4)) == 6);
  // Long job of the subset-sum reduction with T = 3, sum 3: startable at T - 1.
  CHECK(critical_time(make_job(0, 0, 3 + 4 - 1, 4)) == 2);
  CHECK(critical_time(make_job(0, 3, 8, 5)) == 3);
}

TEST_CASE("adjusted critical time") {
  const Job j = make_job(0, 0, 10, 4);
  CHECK(adjusted_critical_time(j, 0) == 6);
  CHECK(adjusted_critical_time(j, 4) == 10);
  const Job l = make_job(0, 0, 100, 51);
  for (Time y = 0; y <= 51; ++y) CHECK(adjusted_critical_time(l, y) == 49 + y);
  CHECK_THROWS_AS(adjusted_critical_time(j, 5), PreconditionError);
  CHECK_THROWS_AS(adjusted_critical_time(j, -1), PreconditionError);
}

TEST_CASE("critical time lies before the deadline") {
  for (Time t = 1; t < 20; ++t) {
    const Job j = make_job(0, 0, 25, t);
    CHECK(critical_time(j) < j.deadline);
    for (Time y = 1; y <= t; ++y) CHECK(adjusted_critical_time(j, y) > adjusted_critical_time(j, y - 1));
  }
}

TEST_CASE("evaluate the worked example") {
  const Instance inst = worked_example();
  const Schedule ends = schedule({{0, 0, 2}, {2, 8, 10}}, 10);
  CHECK(evaluate(inst, ends, Objective::kTotalWork) == 4);
  CHECK(evaluate(inst, ends, Objective::kWeightedCompleted) == 4);
  const Schedule middle = schedule({{1, 0, 9}}, 9);
  CHECK(evaluate(inst, middle, Objective::kMakespan) == 9);
  CHECK(evaluate(inst, middle, Objective::kWeightedCompleted) == 9);
  const Schedule empty = schedule({}, 0);
  for (Objective o : {Objective::kTotalWork, Objective::kWeightedCompleted, Objective::kMakespan}) {
    CHECK(evaluate(inst, empty, o) == 0);
  }
  const Schedule stray = schedule({{7, 0, 1}}, 1);
  CHECK_THROWS_AS(evaluate(inst, stray, Objective::kTotalWork), PreconditionError);
}

TEST_CASE("total work matches executed amounts") {
  const Instance inst = worked_example();
  const Schedule s = schedule({{1, 0, 3}, {0, 3, 4}, {1, 4, 6}, {2, 8, 10}}, 10);
  const auto y = executed_amounts(inst, s);
  CHECK(y == std::vector<Time>{1, 5, 2});
  CHECK(evaluate(inst, s, Objective::kTotalWork) == 8);
  CHECK(evaluate(inst, s, Objective::kWeightedCompleted) == 2);
}

TEST_CASE("append and normalize merge touching pieces") {
  Schedule s;
  append_work(s, 0, 0, 1);
  append_work(s, 0, 1, 2);
  append_work(s, 1, 2, 3);
  append_work(s, 0, 4, 5);
  CHECK(s.segments.size() == 3);
  const Schedule n = normalized(schedule({{1, 2, 3}, {0, 1, 2}, {0, 0, 1}}, 3));
  CHECK(n.segments == std::vector<Segment>{{0, 0, 2}, {1, 2, 3}});
}

TEST_CASE("scaling multiplies every time") {
  const Instance s = scaled(worked_example(), 3);
  CHECK(s.scale == 3);
  CHECK(s.job(2).arrival == 24);
  CHECK(s.job(2).deadline == 30);
  CHECK(s.job(1).length == 27);
  CHECK(s.job(1).weight == 27);
  CHECK(s.horizon() == 30);
}

TEST_CASE("names round-trip") {
  for (Regime r : {Regime::kNonpreemptive, Regime::kPreemptI, Regime::kPreemptII, Regime::kPreemptIII}) {
    CHECK(parse_regime(to_string(r)) == r);
  }
  for (Objective o : {Objective::kTotalWork, Objective::kWeightedCompleted, Objective::kMakespan}) {
    CHECK(parse_objective(to_string(o)) == o);
  }
  CHECK_FALSE(parse_regime("preempt4").has_value());
  CHECK(to_string(Rational{3, 2}) == "3/2");
}

TEST_CASE("parse a job record") {
  const Instance inst = parse_instance(
      "lbp v1\nregime: nonpreemptive\nscale: 1\njob 0 arrival=0 deadline=10 length=4\n");
  REQUIRE(inst.size() == 1);
  CHECK(inst.job(0) == Job{0, 0, 10, 4, 4});
}

TEST_CASE("weights and comments") {
  const Instance inst = parse_instance(
      "# header\nlbp v1\nregime: preempt3  # trailing\nscale: 6\n\n"
      "job 0 arrival=1 deadline=9 length=3 weight=1\njob 1 length=2 deadline=4 arrival=0\n");
  CHECK(inst.regime == Regime::kPreemptIII);
  CHECK(inst.scale == 6);
  CHECK(inst.job(0).weight == 1);
  CHECK(inst.job(1) == Job{1, 0, 4, 2, 2});
}

TEST_CASE("instance round trip") {
  for (Regime r : {Regime::kNonpreemptive, Regime::kPreemptII}) {
    Instance inst = worked_example(r);
    inst.jobs[1].weight = 1;
    CHECK(parse_instance(serialize_instance(inst)) == inst);
  }
  const Instance degenerate = make(Regime::kPreemptI, {{5, 6, 3}});
  CHECK(parse_instance(serialize_instance(degenerate)) == degenerate);
  CHECK(degenerate.job(0).degenerate());
}

TEST_CASE("schedule round trip") {
  const Schedule s = schedule({{1, 0, 7}, {0, 7, 9}}, 9);
  CHECK(parse_schedule(serialize_schedule(s)) == s);
  CHECK(parse_schedule(serialize_schedule(Schedule{})) == Schedule{});
}

namespace {

int parse_error_line(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("parse errors carry the line") {
  const std::string head = "lbp v1\nregime: nonpreemptive\nscale: 1\n";
  CHECK(parse_error_line(head + "job 0 arrival=-1 deadline=5 length=1\n") == 4);
  CHECK(parse_error_line(head + "job 0 arrival=0 deadline=5 length=1\njob 0 arrival=0 deadline=5 length=1\n") == 5);
  CHECK(parse_error_line(head + "job 0 arrival=x deadline=5 length=1\n") == 4);
  CHECK(parse_error_line(head + "job 0 arrival=0 deadline=5 length=0\n") == 4);
  CHECK(parse_error_line(head + "job 0 arrival=0 deadline=5\n") == 4);
  CHECK(parse_error_line(head + "job 0 arrival=0 deadline=5 length=1 colour=2\n") == 4);
  CHECK(parse_error_line(head + "job 1 arrival=0 deadline=5 length=1\n") == 4);
  CHECK(parse_error_line("lbp v2\n") == 1);
  CHECK(parse_error_line("lbp v1\nregime: sometimes\n") == 2);
  CHECK(parse_error_line("lbp v1\nregime: preempt1\nscale: 0\n") == 3);
  CHECK(parse_error_line("") == 1);
  try {
    parse_instance(head + "job 0 arrival=-1 deadline=5 length=1\n");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("arrival-negative") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_schedule("leave: 3\nseg 0 2 2\n"), ParseError);
  CHECK_THROWS_AS(parse_schedule("seg 0 0 1\n"), ParseError);
}

TEST_CASE("check_instance") {
  Instance inst = worked_example();
  CHECK_NOTHROW(check_instance(inst));
  inst.jobs[2].id = 5;
  CHECK_THROWS_AS(check_instance(inst), PreconditionError);
  inst = worked_example();
  inst.scale = 0;
  CHECK_THROWS_AS(check_instance(inst), PreconditionError);
}
