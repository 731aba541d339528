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

#ifndef LBP_CORE_HPP
#define LBP_CORE_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lbp {

// Every time and duration lives on the integer grid of its instance.
using Time = std::int64_t;

inline constexpr Time kInfinity = INT64_MAX / 4;

// ---------------------------------------------------------------------------
// Errors

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An algorithm was called on an instance outside its domain.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A search or table grew past its configured limit.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Domain types

struct Job {
  int id = 0;
  Time arrival = 0;
  Time deadline = 0;
  Time length = 1;
  Time weight = 1;

  // The window cannot hold the job; such a job is never executable.
  bool degenerate() const { return deadline < arrival + length; }

  friend bool operator==(const Job&, const Job&) = default;
};

enum class Regime { kNonpreemptive, kPreemptI, kPreemptII, kPreemptIII };

enum class Objective { kTotalWork, kWeightedCompleted, kMakespan };

struct Instance {
  std::vector<Job> jobs;
  Regime regime = Regime::kNonpreemptive;
  // Grid units per original time unit.
  Time scale = 1;

  int size() const { return static_cast<int>(jobs.size()); }
  const Job& job(int id) const { return jobs.at(static_cast<std::size_t>(id)); }
  // K = max deadline (0 for an empty instance).
  Time horizon() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

// Half-open work interval [start, end) spent on one job.
struct Segment {
  int job_id = 0;
  Time start = 0;
  Time end = 0;

  Time length() const { return end - start; }
  friend bool operator==(const Segment&, const Segment&) = default;
};

struct Schedule {
  std::vector<Segment> segments;
  Time leave_time = 0;

  friend bool operator==(const Schedule&, const Schedule&) = default;
};

// Builds jobs with ids 0..n-1 and weight = length.
Job make_job(int id, Time arrival, Time deadline, Time length);
Instance make_instance(Regime regime,
                       std::span<const std::array<Time, 3>> arrival_deadline_length,
                       Time scale = 1);

// Checks id layout, nonnegative arrival, positive length and scale.
void check_instance(const Instance& instance);

// ---------------------------------------------------------------------------
// Time arithmetic

// Latest start that still meets the deadline: d - t.
constexpr Time critical_time(const Job& job) { return job.deadline - job.length; }

// Latest resume time given `done` units already executed: d - t + done.
Time adjusted_critical_time(const Job& job, Time done);

// ---------------------------------------------------------------------------
// Schedules

// Per-job executed amount y_i.
std::vector<Time> executed_amounts(const Instance& instance, const Schedule& schedule);

// Sorts segments by start time and merges touching pieces of the same job.
Schedule normalized(Schedule schedule);

// Appends [start, end) for `job_id`, merging with the last segment when
// contiguous.
void append_work(Schedule& schedule, int job_id, Time start, Time end);

Time evaluate(const Instance& instance, const Schedule& schedule, Objective objective);

// Multiplies every time of the instance (and its scale) by `factor`.
Instance scaled(const Instance& instance, Time factor);

std::string_view to_string(Regime regime);
std::string_view to_string(Objective objective);
std::optional<Regime> parse_regime(std::string_view text);
std::optional<Objective> parse_objective(std::string_view text);

// Exact rational used for analysis bounds (R, Delta); never a time value.
struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;
};

std::string to_string(Rational r);

}  // namespace lbp

#endif  // LBP_CORE_HPP
