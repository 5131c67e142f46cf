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

#include <catch_amalgamated.hpp>

#include <set>

#include "imp/arith.hpp"
#include "imp/words.hpp"

using namespace imp;

TEST_CASE("triangle walks 0, 0 1, 0 1 2, ...", "[arith]") {
  const std::vector<std::uint64_t> expected{0, 0, 1, 0, 1, 2, 0, 1, 2, 3};
  for (std::uint64_t x = 0; x < expected.size(); ++x) CHECK(triangle(x) == expected[x]);
  CHECK(base(5) == 2);
  CHECK(triangle(5) == 2);
}

TEST_CASE("triangle agrees with an explicit walk and stays below base", "[arith]") {
  std::uint64_t row = 0, pos = 0;
  for (std::uint64_t x = 0; x < 200000; ++x) {
    REQUIRE(triangle(x) == pos);
    REQUIRE(base(x) == row);
    REQUIRE(triangle(x) <= base(x));
    if (pos == row) {
      ++row;
      pos = 0;
    } else {
      ++pos;
    }
  }
}

TEST_CASE("isqrt is exact near perfect squares", "[arith]") {
  for (std::uint64_t r : {1ULL, 2ULL, 3ULL, 1000ULL, 4294967295ULL, 3037000499ULL}) {
    CHECK(isqrt(r * r) == r);
    CHECK(isqrt(r * r - 1) == r - 1);
    if (r < 4294967295ULL) CHECK(isqrt(r * r + 2 * r) == r);
  }
  CHECK(isqrt(0) == 0);
  CHECK(isqrt(~0ULL) == 4294967295ULL);
}

TEST_CASE("caf finds the largest factorial below x", "[arith]") {
  CHECK(caf(1) == 1);
  CHECK(caf(2) == 2);
  CHECK(caf(5) == 2);
  CHECK(caf(6) == 3);
  CHECK(caf(23) == 3);
  CHECK(caf(24) == 4);
  CHECK(caf(5039) == 6);
  CHECK(caf(5040) == 7);
  CHECK_THROWS_AS(caf(0), std::invalid_argument);
  for (std::uint64_t x = 1; x < 50000; ++x) {
    const std::uint64_t y = caf(x);
    REQUIRE(factorial(y) <= x);
    REQUIRE(factorial(y + 1) > x);
  }
}

TEST_CASE("mex is the least absent value", "[arith]") {
  CHECK(mex(std::vector<std::uint64_t>{}) == 0);
  CHECK(mex(std::vector<std::uint64_t>{0, 1, 2}) == 3);
  CHECK(mex(std::vector<std::uint64_t>{0, 1, 3}) == 2);
  CHECK(mex(std::vector<std::uint64_t>{5, 1, 0}) == 2);
}

TEST_CASE("m-sequence criteria", "[arith]") {
  for (std::uint64_t t = 0; t <= 1000; ++t) {
    REQUIRE(MSequence::at(t) == t + 2);
    if (t < 60) REQUIRE(MSequence::at(t + 1) <= (1ULL << MSequence::at(t)) - 1);
  }
  // m(t+1) / 2^m(t) shrinks toward zero.
  double prev = 1;
  for (std::uint64_t t = 1; t < 50; ++t) {
    const double ratio = static_cast<double>(MSequence::at(t + 1)) / std::ldexp(1.0, static_cast<int>(MSequence::at(t)));
    REQUIRE(ratio < prev);
    prev = ratio;
  }
  CHECK(prev < 1e-12);
}

TEST_CASE("shortlex enumeration starts at the empty word", "[words]") {
  const std::vector<std::string> first{"", "0", "1", "00", "01", "10", "11", "000"};
  for (std::size_t i = 0; i < first.size(); ++i) CHECK(format_word(word_at(i)) == first[i]);
}

TEST_CASE("word ranks are a bijection on short words", "[words]") {
  std::set<std::string> seen;
  for (std::uint64_t i = 0; i < (1ULL << 17) - 1; ++i) {
    const Word w = word_at(i);
    REQUIRE(w.size() <= 16);
    REQUIRE(rank_of(w) == i);
    REQUIRE(rank_of(word_at(i, WordOrder::Reflected), WordOrder::Reflected) == i);
    if (i < 5000) REQUIRE(seen.insert(format_word(w)).second);
  }
}
