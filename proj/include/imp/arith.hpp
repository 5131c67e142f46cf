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

// Integer helpers used by the learners and the approximability constructions.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace imp {

// floor(sqrt(x)), exact for all 64-bit x.
inline std::uint64_t isqrt(std::uint64_t x) {
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<long double>(x)));
  while (r > 0 && (r > x / r)) --r;                      // r*r > x
  while ((r + 1) <= x / (r + 1)) ++r;                    // (r+1)^2 <= x
  return r;
}

// Row of the triangular walk: floor((floor(sqrt(8x+1)) - 1) / 2).
inline std::uint64_t base(std::uint64_t x) { return (isqrt(8 * x + 1) - 1) / 2; }

// Position within the row: 0, 0,1, 0,1,2, 0,1,2,3, ...
inline std::uint64_t triangle(std::uint64_t x) {
  const std::uint64_t b = base(x);
#ifdef IMP_FAULT_TRIANGLE
  return (x - b * (b + 1) / 2 + 1) % (b + 1);
#else
  return x - b * (b + 1) / 2;
#endif
}

// Largest y with y! <= x.
inline std::uint64_t caf(std::uint64_t x) {
  if (x < 1) throw std::invalid_argument("caf: x must be >= 1");
  std::uint64_t y = 1;
  std::uint64_t next = 2;  // (y+1)!
  while (next <= x) {
    ++y;
    if (next > x / (y + 1)) break;
    next *= (y + 1);
  }
  return y;
}

inline std::uint64_t factorial(std::uint64_t n) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

// Least nonnegative integer not in s.
inline std::uint64_t mex(std::span<const std::uint64_t> s) {
  std::vector<std::uint64_t> v(s.begin(), s.end());
  std::sort(v.begin(), v.end());
  std::uint64_t m = 0;
  for (auto x : v) {
    if (x == m) ++m;
    else if (x > m) break;
  }
  return m;
}

// Encoding-width schedule m_t = t + 2.
struct MSequence {
  static constexpr std::uint64_t at(std::uint64_t t) { return t + 2; }
};

}  // namespace imp
