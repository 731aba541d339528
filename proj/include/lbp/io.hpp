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

#ifndef LBP_IO_HPP
#define LBP_IO_HPP

#include <string>
#include <string_view>

#include "lbp/core.hpp"

namespace lbp {

// Text formats. Instance:
//   lbp v1
//   regime: nonpreemptive|preempt1|preempt2|preempt3
//   scale: <q>
//   job <id> arrival=<int> deadline=<int> length=<int> [weight=<int>]
// Schedule:
//   leave: <int>
//   seg <job-id> <start> <end>
// '#' starts a comment. Errors are ParseError with the offending line.

Instance parse_instance(std::string_view text);
std::string serialize_instance(const Instance& instance);

Schedule parse_schedule(std::string_view text);
std::string serialize_schedule(const Schedule& schedule);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace lbp

#endif  // LBP_IO_HPP
