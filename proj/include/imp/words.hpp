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

// Bijective enumerations of {0,1}*.
//
// Shortlex, 0-based: w_0 = "", w_1 = "0", w_2 = "1", w_3 = "00", ...
// The reflected variant orders each length class by the reversed word and
// exists only so sanity checks can run under a second enumeration.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "imp/machine.hpp"

namespace imp {

enum class WordOrder { Shortlex, Reflected };

inline Word word_at(std::uint64_t rank, WordOrder order = WordOrder::Shortlex) {
  if (rank == std::numeric_limits<std::uint64_t>::max()) throw std::out_of_range("word_at: rank too large");
  const std::uint64_t shifted = rank + 1;
  const int length = std::bit_width(shifted) - 1;
  const std::uint64_t value = shifted - (std::uint64_t{1} << length);
  Word w(static_cast<std::size_t>(length));
  for (int i = 0; i < length; ++i) w[i] = static_cast<Bit>((value >> (length - 1 - i)) & 1U);
  if (order == WordOrder::Reflected) std::reverse(w.begin(), w.end());
  return w;
}

inline std::uint64_t rank_of(WordView w, WordOrder order = WordOrder::Shortlex) {
  if (w.size() >= 64) throw std::out_of_range("rank_of: word too long");
  std::uint64_t value = 0;
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Bit b = order == WordOrder::Shortlex ? w[i] : w[n - 1 - i];
    value = (value << 1) | b;
  }
  return (std::uint64_t{1} << n) - 1 + value;
}

}  // namespace imp
