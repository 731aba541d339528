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

#include "lbp/io.hpp"

#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

namespace lbp {
namespace {

struct Line {
  int number;
  std::vector<std::string_view> words;
};

std::vector<std::string_view> split_words(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Non-empty lines with comments stripped.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view raw = text.substr(pos, eol - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    auto words = split_words(raw);
    if (!words.empty()) lines.push_back(Line{number, std::move(words)});
    pos = eol + 1;
  }
  return lines;
}

Time parse_int(std::string_view s, int line, std::string_view what) {
  Time v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError(line, std::string(what) + " is not an integer: '" + std::string(s) + "'");
  }
  return v;
}

}  // namespace

Instance parse_instance(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "empty instance");
  auto expect_header = [&](std::size_t idx, std::string_view key) -> const Line& {
    if (idx >= lines.size()) throw ParseError(lines.back().number, "missing '" + std::string(key) + "' line");
    const Line& l = lines[idx];
    if (l.words.size() != 2 || l.words[0] != key) {
      throw ParseError(l.number, "expected '" + std::string(key) + " <value>'");
    }
    return l;
  };

  const Line& magic = expect_header(0, "lbp");
  if (magic.words[1] != "v1") throw ParseError(magic.number, "unsupported version");

  Instance inst;
  const Line& regime = expect_header(1, "regime:");
  auto r = parse_regime(regime.words[1]);
  if (!r) throw ParseError(regime.number, "unknown regime '" + std::string(regime.words[1]) + "'");
  inst.regime = *r;

  const Line& scale = expect_header(2, "scale:");
  inst.scale = parse_int(scale.words[1], scale.number, "scale");
  if (inst.scale < 1) throw ParseError(scale.number, "scale must be positive");

  std::set<Time> seen;
  for (std::size_t k = 3; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (l.words[0] != "job" || l.words.size() < 2) throw ParseError(l.number, "expected a job record");
    const Time id = parse_int(l.words[1], l.number, "job id");
    if (!seen.insert(id).second) throw ParseError(l.number, "duplicate job id " + std::to_string(id));
    if (id != static_cast<Time>(inst.jobs.size())) {
      throw ParseError(l.number, "job ids must be 0..n-1 in input order");
    }
    Job job;
    job.id = static_cast<int>(id);
    bool has_a = false, has_d = false, has_t = false, has_w = false;
    for (std::size_t w = 2; w < l.words.size(); ++w) {
      std::string_view word = l.words[w];
      const auto eq = word.find('=');
      if (eq == std::string_view::npos) throw ParseError(l.number, "malformed field '" + std::string(word) + "'");
      std::string_view key = word.substr(0, eq);
      const Time value = parse_int(word.substr(eq + 1), l.number, key);
      bool* flag = nullptr;
      if (key == "arrival") { job.arrival = value; flag = &has_a; }
      else if (key == "deadline") { job.deadline = value; flag = &has_d; }
      else if (key == "length") { job.length = value; flag = &has_t; }
      else if (key == "weight") { job.weight = value; flag = &has_w; }
      else throw ParseError(l.number, "unknown field '" + std::string(key) + "'");
      if (*flag) throw ParseError(l.number, "repeated field '" + std::string(key) + "'");
      *flag = true;
    }
    if (!has_a || !has_d || !has_t) throw ParseError(l.number, "job needs arrival, deadline and length");
    if (job.arrival < 0) throw ParseError(l.number, "arrival-negative");
    if (job.length < 1) throw ParseError(l.number, "length must be at least 1");
    if (!has_w) job.weight = job.length;
    if (job.weight < 0) throw ParseError(l.number, "weight must be nonnegative");
    inst.jobs.push_back(job);
  }
  return inst;
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  out << "lbp v1\n"
      << "regime: " << to_string(instance.regime) << "\n"
      << "scale: " << instance.scale << "\n";
  for (const Job& j : instance.jobs) {
    out << "job " << j.id << " arrival=" << j.arrival << " deadline=" << j.deadline
        << " length=" << j.length;
    if (j.weight != j.length) out << " weight=" << j.weight;
    out << "\n";
  }
  return out.str();
}

Schedule parse_schedule(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty() || lines[0].words.size() != 2 || lines[0].words[0] != "leave:") {
    throw ParseError(lines.empty() ? 1 : lines[0].number, "expected 'leave: <int>'");
  }
  Schedule s;
  s.leave_time = parse_int(lines[0].words[1], lines[0].number, "leave");
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const Line& l = lines[k];
    if (l.words.size() != 4 || l.words[0] != "seg") {
      throw ParseError(l.number, "expected 'seg <job-id> <start> <end>'");
    }
    Segment seg;
    seg.job_id = static_cast<int>(parse_int(l.words[1], l.number, "job id"));
    seg.start = parse_int(l.words[2], l.number, "start");
    seg.end = parse_int(l.words[3], l.number, "end");
    if (seg.end <= seg.start) throw ParseError(l.number, "segment must have start < end");
    s.segments.push_back(seg);
  }
  return s;
}

std::string serialize_schedule(const Schedule& schedule) {
  std::ostringstream out;
  out << "leave: " << schedule.leave_time << "\n";
  for (const Segment& s : schedule.segments) {
    out << "seg " << s.job_id << " " << s.start << " " << s.end << "\n";
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << contents;
}

}  // namespace lbp
