// Copyright 2026 The IMP Workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Fair round-robin interleaving of many machine runs.  Each sweep advances
// every live query by one instruction, in ascending query id; the run stops
// as soon as target_count queries have accepted.

#include <cstdint>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "imp/machine.hpp"

namespace imp {

struct DovetailQuery {
  const Program* program;
  WordView word;
};

struct DovetailResult {
  // (query id, steps at acceptance), in completion order.
  std::vector<std::pair<std::size_t, std::uint64_t>> halted;
  bool reached_target = false;
  std::uint64_t total_steps = 0;

  friend bool operator==(const DovetailResult&, const DovetailResult&) = default;
};

inline DovetailResult dovetail(std::span<const DovetailQuery> queries, std::size_t target_count,
                               std::uint64_t fuel_cap) {
  if (target_count > queries.size()) throw std::invalid_argument("dovetail: target_count exceeds query count");
  DovetailResult result;
  if (target_count == 0) {
    result.reached_target = true;
    return result;
  }

  std::vector<Execution> runs;
  runs.reserve(queries.size());
  std::vector<std::size_t> live;
  live.reserve(queries.size());
  for (std::size_t id = 0; id < queries.size(); ++id) {
    runs.emplace_back(*queries[id].program, queries[id].word);
    live.push_back(id);
  }

  while (!live.empty()) {
    std::size_t kept = 0;
    for (std::size_t slot = 0; slot < live.size(); ++slot) {
      const std::size_t id = live[slot];
      Execution& ex = runs[id];
      if (ex.next_costs_fuel() && ex.steps() == fuel_cap) continue;  // out of fuel: drop
      const std::uint64_t before = ex.steps();
      ex.step();
      result.total_steps += ex.steps() - before;
      if (ex.finished()) {
        if (ex.verdict() == Verdict::Accepted) {
          result.halted.emplace_back(id, ex.steps());
          if (result.halted.size() == target_count) {
            result.reached_target = true;
            return result;
          }
        }
        continue;
      }
      live[kept++] = id;
    }
    live.resize(kept);
  }
  return result;
}

// Convenience form: one machine on many words.
inline DovetailResult dovetail(const Program& program, std::span<const Word> words, std::size_t target_count,
                               std::uint64_t fuel_cap) {
  std::vector<DovetailQuery> queries;
  queries.reserve(words.size());
  for (const auto& w : words) queries.push_back({&program, w});
  return dovetail(queries, target_count, fuel_cap);
}

}  // namespace imp
