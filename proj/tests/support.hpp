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

#ifndef LBP_TESTS_SUPPORT_HPP
#define LBP_TESTS_SUPPORT_HPP

#include <array>
#include <initializer_list>
#include <vector>

#include "lbp/core.hpp"

namespace lbp::test {

// Jobs as {arrival, deadline, length}.
inline Instance make(Regime regime, std::initializer_list<std::array<Time, 3>> jobs, Time scale = 1) {
  const std::vector<std::array<Time, 3>> list(jobs);
  return make_instance(regime, list, scale);
}

// The worked example with a shared deadline of 10.
inline Instance worked_example(Regime regime = Regime::kPreemptII) {
  return make(regime, {{0, 10, 2}, {0, 10, 9}, {8, 10, 2}});
}

inline Schedule schedule(std::initializer_list<Segment> segments, Time leave) {
  return Schedule{std::vector<Segment>(segments), leave};
}

}  // namespace lbp::test

#endif  // LBP_TESTS_SUPPORT_HPP
