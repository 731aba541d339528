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

// Command-line front end. Exit codes: 0 success or YES, 1 NO, 2 precondition,
// 3 parse error, 4 solver output rejected by the validator, 5 mismatch.

#include <algorithm>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "lbp/common_deadline.hpp"
#include "lbp/core.hpp"
#include "lbp/exact.hpp"
#include "lbp/feasibility.hpp"
#include "lbp/gadgets.hpp"
#include "lbp/io.hpp"
#include "lbp/oracle.hpp"

namespace {

using namespace lbp;

enum Exit { kOk = 0, kNo = 1, kPrecondition = 2, kParse = 3, kInternal = 4, kMismatch = 5 };

struct InternalFailure : Error {
  using Error::Error;
};

Instance load_instance(const std::string& path) { return parse_instance(read_file(path)); }

Objective objective_of(const std::string& name) {
  const auto o = parse_objective(name);
  if (!o) throw PreconditionError("unknown objective '" + name + "'");
  return *o;
}

void emit(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
  } else {
    write_file(path, text);
  }
}

bool all_same(const Instance& inst, Time Job::*field) {
  return std::all_of(inst.jobs.begin(), inst.jobs.end(),
                     [&](const Job& j) { return j.*field == inst.jobs.front().*field; });
}

std::string pick_algorithm(const Instance& inst, Objective objective) {
  switch (inst.regime) {
    case Regime::kNonpreemptive: {
      const bool unit = std::all_of(inst.jobs.begin(), inst.jobs.end(),
                                    [](const Job& j) { return j.length == 1; });
      if (unit && objective == Objective::kTotalWork) return "unit-ldd";
      if (has_narrow_windows(inst)) return "narrow-dp";
      if (all_same(inst, &Job::arrival)) return "common-release";
      return "ratio-dp";
    }
    case Regime::kPreemptI:
      return objective == Objective::kWeightedCompleted ? "preempt1-weight" : "preempt1-ldd";
    case Regime::kPreemptII:
      if (objective == Objective::kMakespan && all_same(inst, &Job::deadline)) {
        return "common-deadline";
      }
      break;
    case Regime::kPreemptIII:
      break;
  }
  throw PreconditionError("no polynomial algorithm covers this regime and objective; use 'oracle'");
}

struct Solved {
  std::string algo;
  SolveResult result;
  std::string note;
};

Solved run_solver(const Instance& inst, Objective objective, std::string algo) {
  if (algo == "auto") algo = pick_algorithm(inst, objective);
  Solved s{algo, {}, {}};
  if (algo == "unit-ldd") {
    if (objective != Objective::kTotalWork) throw PreconditionError("unit-ldd minimizes total work");
    s.result = solve_unit_ldd(inst);
  } else if (algo == "narrow-dp") {
    s.result = solve_narrow_window_dp(inst, objective);
  } else if (algo == "ratio-dp") {
    s.result = solve_bounded_ratio_dp(inst, infer_ratio_bounds(inst), objective);
  } else if (algo == "common-release") {
    s.result = solve_common_release_dp(inst, objective);
  } else if (algo == "preempt1-ldd") {
    s.result = solve_preempt1_ldd(inst, objective);
  } else if (algo == "preempt1-weight") {
    if (objective != Objective::kWeightedCompleted) {
      throw PreconditionError("preempt1-weight minimizes weighted completion");
    }
    s.result = solve_preempt1_min_weight(inst);
  } else if (algo == "common-deadline") {
    if (objective != Objective::kMakespan) throw PreconditionError("common-deadline minimizes makespan");
    const MakespanResult m = minimize_makespan_common_deadline(inst);
    s.result = {m.schedule, m.makespan};
    if (!m.attained) {
      s.note = " attained=no refined_scale=" + std::to_string(m.refined_scale) +
               " refined_value=" + std::to_string(m.refined_makespan);
    }
  } else {
    throw PreconditionError("unknown algorithm '" + algo + "'");
  }
  const auto violations = validate(inst, s.result.schedule);
  if (!violations.empty()) {
    throw InternalFailure(algo + " produced an infeasible schedule: " + to_string(violations.front()));
  }
  if (evaluate(inst, s.result.schedule, objective) != s.result.value) {
    throw InternalFailure(algo + " reported a value its schedule does not attain");
  }
  return s;
}

std::vector<Time> parse_values(const std::string& text) {
  std::vector<Time> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoll(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw PreconditionError("bad value list '" + text + "'");
    }
  }
  return out;
}

std::string format_stats(const Instance& inst) {
  std::ostringstream out;
  Time total = 0, min_t = 0, max_t = 0;
  Rational r{0, 1};
  for (const Job& j : inst.jobs) {
    total += j.length;
    min_t = min_t == 0 ? j.length : std::min(min_t, j.length);
    max_t = std::max(max_t, j.length);
    const Rational cur{j.deadline - j.arrival, j.length};
    if (cur.num * r.den > r.num * cur.den) r = cur;
  }
  const ForcedGaps gaps = forced_gaps(inst);
  const int degenerate = static_cast<int>(
      std::count_if(inst.jobs.begin(), inst.jobs.end(), [](const Job& j) { return j.degenerate(); }));
  out << "n=" << inst.size() << '\n'
      << "K=" << inst.horizon() << '\n'
      << "scale=" << inst.scale << '\n'
      << "regime=" << to_string(inst.regime) << '\n'
      << "W=" << total << '\n'
      << "R_max=" << to_string(r) << '\n'
      << "R_max<2=" << (has_narrow_windows(inst) ? "yes" : "no") << '\n'
      << "Delta=" << to_string(Rational{max_t, std::max<Time>(min_t, 1)}) << '\n'
      << "common_arrival=" << (all_same(inst, &Job::arrival) ? "yes" : "no") << '\n'
      << "common_deadline=" << (all_same(inst, &Job::deadline) ? "yes" : "no") << '\n'
      << "degenerate_jobs=" << degenerate << '\n'
      << "forced_gaps=" << gaps.gaps.size() << '\n'
      << "forced_gap_end=" << gaps.end << '\n';
  return out.str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lazy bureaucrat scheduling: exact solvers, oracle and gadgets"};
  app.require_subcommand(1);

  std::string instance_path, schedule_path, out_path, objective_name = "total_work", algo = "auto";
  Time target = 0;

  auto* solve = app.add_subcommand("solve", "run a polynomial solver");
  solve->add_option("instance", instance_path)->required();
  solve->add_option("--objective", objective_name);
  solve->add_option("--algo", algo)
      ->check(CLI::IsMember({"auto", "unit-ldd", "narrow-dp", "ratio-dp", "common-release",
                             "preempt1-ldd", "preempt1-weight", "common-deadline"}));
  solve->add_option("--out", out_path, "schedule file");

  auto* decide = app.add_subcommand("decide", "can the bureaucrat go home at exactly T");
  decide->add_option("instance", instance_path)->required();
  decide->add_option("--T", target)->required();
  decide->add_option("--out", out_path, "schedule file for a YES answer");

  auto* oracle = app.add_subcommand("oracle", "exhaustive optimum");
  oracle->add_option("instance", instance_path)->required();
  oracle->add_option("--objective", objective_name);
  oracle->add_option("--out", out_path, "witness schedule file");

  auto* check = app.add_subcommand("validate", "check a schedule");
  check->add_option("instance", instance_path)->required();
  check->add_option("schedule", schedule_path)->required();

  auto* compare = app.add_subcommand("compare", "solver against oracle");
  compare->add_option("instance", instance_path)->required();
  compare->add_option("--objective", objective_name);
  compare->add_option("--algo", algo);

  auto* stats = app.add_subcommand("stats", "structural parameters");
  stats->add_option("instance", instance_path)->required();

  auto* gen = app.add_subcommand("gen", "generate an instance");
  std::string gadget, values_text, regime_name = "nonpreemptive", profile_name = "general";
  Time bound = 0, delta = 2, horizon = 10;
  int count = 4;
  std::uint64_t seed = 1;
  std::string canonical_path;
  gen->add_option("gadget", gadget)
      ->required()
      ->check(CLI::IsMember({"subset-sum", "preempt2-subset-sum", "3partition", "bounded-delta",
                             "limiting", "random"}));
  gen->add_option("--values", values_text, "comma-separated integers");
  gen->add_option("--target", target);
  gen->add_option("--B", bound);
  gen->add_option("--delta", delta);
  gen->add_option("--n", count);
  gen->add_option("--K", horizon);
  gen->add_option("--regime", regime_name);
  gen->add_option("--profile", profile_name);
  gen->add_option("--seed", seed);
  gen->add_option("--out", out_path);
  gen->add_option("--canonical", canonical_path, "3partition: canonical schedule file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kPrecondition;
  }

  try {
    if (*solve) {
      const Instance inst = load_instance(instance_path);
      const Solved s = run_solver(inst, objective_of(objective_name), algo);
      if (!out_path.empty()) write_file(out_path, serialize_schedule(s.result.schedule));
      std::cout << "value=" << s.result.value << " algo=" << s.algo << " scale=" << inst.scale
                << s.note << '\n';
      return kOk;
    }
    if (*decide) {
      const Instance inst = load_instance(instance_path);
      const auto s = decide_go_home_by(inst, target);
      if (!s) {
        std::cout << "NO\n";
        return kNo;
      }
      if (!out_path.empty()) write_file(out_path, serialize_schedule(*s));
      std::cout << "YES\n";
      return kOk;
    }
    if (*oracle) {
      const Instance inst = load_instance(instance_path);
      const OracleResult r = oracle_optimize(inst, objective_of(objective_name));
      if (!out_path.empty()) write_file(out_path, serialize_schedule(r.witness));
      std::cout << "value=" << r.optimum << " scale=" << inst.scale << " states=" << r.states << '\n';
      return kOk;
    }
    if (*check) {
      const Instance inst = load_instance(instance_path);
      const Schedule sched = parse_schedule(read_file(schedule_path));
      const auto violations = validate(inst, sched);
      if (violations.empty()) {
        std::cout << "OK\n";
        return kOk;
      }
      for (const Violation& v : violations) std::cout << to_string(v) << '\n';
      return kNo;
    }
    if (*compare) {
      const Instance inst = load_instance(instance_path);
      const Objective objective = objective_of(objective_name);
      const Solved s = run_solver(inst, objective, algo);
      const OracleResult r = oracle_optimize(inst, objective);
      std::cout << "solver=" << s.result.value << " oracle=" << r.optimum << '\n';
      return s.result.value == r.optimum ? kOk : kMismatch;
    }
    if (*stats) {
      std::cout << format_stats(load_instance(instance_path));
      return kOk;
    }
    if (*gen) {
      const std::vector<Time> values = parse_values(values_text);
      Instance inst;
      if (gadget == "subset-sum") {
        inst = gen_subset_sum_nonpreemptive(values, target).instance;
      } else if (gadget == "preempt2-subset-sum") {
        inst = gen_preempt2_subset_sum(values, target);
      } else if (gadget == "3partition") {
        const ThreePartitionGadget g = gen_3partition(values, bound);
        inst = g.instance;
        if (!canonical_path.empty()) {
          const auto triples = find_3partition(values, bound);
          if (!triples) throw PreconditionError("values admit no 3-partition");
          write_file(canonical_path, serialize_schedule(canonical_schedule(g, *triples)));
        }
      } else if (gadget == "bounded-delta") {
        inst = gen_bounded_delta(values, bound, delta);
      } else if (gadget == "limiting") {
        inst = gen_limiting_example(count);
      } else {
        const auto regime = parse_regime(regime_name);
        const auto profile = parse_profile(profile_name);
        if (!regime || !profile) throw PreconditionError("unknown regime or profile");
        inst = gen_random(count, horizon, *regime, *profile, seed);
      }
      emit(out_path, serialize_instance(inst));
      return kOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << '\n';
    return kPrecondition;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kPrecondition;
  } catch (const InternalFailure& e) {
    std::cerr << "internal: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}
