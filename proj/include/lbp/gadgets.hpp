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

#ifndef LBP_GADGETS_HPP
#define LBP_GADGETS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lbp/core.hpp"

namespace lbp {

// Subset-sum reduction without preemption. Jobs 0..n-1 are the elements, job
// n is the long job; it can be avoided iff some subset hits the target.
struct SubsetSumGadget {
  Instance instance;
  int long_job = 0;
  bool reachable = false;  // certificate from an independent subset-sum table
};

SubsetSumGadget gen_subset_sum_nonpreemptive(std::span<const Time> values, Time target);

// 3-partition reduction. Element jobs come first (ids 0..3m-1), then the m-1
// separators, then the large job.
struct ThreePartitionGadget {
  Instance instance;
  int m = 0;
  Time bound = 0;  // B
  int large_job = 0;
};

ThreePartitionGadget gen_3partition(std::span<const Time> values, Time bound);

// Each triple lists element indices; triple i fills the i-th window of length B.
Schedule canonical_schedule(const ThreePartitionGadget& gadget,
                            std::span<const std::array<int, 3>> triples);

// Exhaustive search for a partition into triples summing to `bound`.
std::optional<std::vector<std::array<int, 3>>> find_3partition(std::span<const Time> values,
                                                               Time bound);

// Same reduction with separators of length B/3 and the large job replaced by
// zero-slack chains l_1..l_m (length Delta*B/4) and s_1..s_m (length B/4).
// Ids: elements, separators, then l_1, s_1, l_2, s_2, ...
Instance gen_bounded_delta(std::span<const Time> values, Time bound, Time delta);

// Subset-sum reduction for the "still completable" rule, on a grid of 3n units
// per time unit so that epsilon is one grid unit. The last job is the long one.
Instance gen_preempt2_subset_sum(std::span<const Time> values, Time target);

// n-1 jobs of length 51 and one of length 48, all released at 0 and due at 100.
Instance gen_limiting_example(int n);

enum class Profile { kGeneral, kNarrowWindow, kCommonArrival, kCommonDeadline, kUnitLength };

std::string_view to_string(Profile profile);
std::optional<Profile> parse_profile(std::string_view text);

// Deterministic under `seed`; every deadline is at most K.
Instance gen_random(int n, Time horizon, Regime regime, Profile profile, std::uint64_t seed);

}  // namespace lbp

#endif  // LBP_GADGETS_HPP
