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

#include "imp/approx.hpp"

using namespace imp;

namespace {

// Ones in the shortlex word of rank r: drop the leading 1 of r + 1.
unsigned ones_of_rank(std::uint64_t r) {
  std::uint64_t v = r + 1;
  unsigned ones = 0;
  while (v > 1) {
    ones += v & 1;
    v >>= 1;
  }
  return ones;
}

std::uint64_t fact(std::uint64_t y) { return y <= 1 ? 1 : y * fact(y - 1); }

}  // namespace

TEST_CASE("na(PARITY) plays membership of w_{i-1}", "[approx]") {
  const StrategyPtr s = na_wrap(named_language("PARITY", 1000));
  for (std::size_t i = 1; i <= 16; ++i) {
    const Word history(i - 1, 0);
    CHECK(s->respond(history).bit == ones_of_rank(i - 1) % 2);
  }
  CHECK_THROWS_AS(na_wrap(nullptr), std::invalid_argument);
}

TEST_CASE("na strategies ignore history contents", "[approx]") {
  const StrategyPtr s = na_wrap(named_language("FIRST_BIT", 1000));
  CHECK(s->nonadaptive());
  for (std::size_t n = 0; n < 64; ++n) REQUIRE(s->respond(Word(n, 0)).bit == s->respond(Word(n, 1)).bit);
}

TEST_CASE("dissimilarity of simple pairs", "[approx]") {
  const auto parity = named_language("PARITY", 1000);
  CHECK(dissim(*empty_language(), *complete_language(), 100, 1).value == 1);
  CHECK(dissim(*parity, *parity, 100, 1).value == 0);
  CHECK(dissim(*parity, *complement(parity), 100, 50).value == 1);
  for (unsigned L = 1; L <= 8; ++L) {
    const std::uint64_t words = (std::uint64_t{2} << L) - 1;
    const Rational expected(static_cast<long long>((1u << L) - 1), static_cast<long long>(words));
    CHECK(dissim(*empty_language(), *parity, words, words).value == expected);
  }
  CHECK_THROWS_AS(dissim(*parity, *parity, 10, 0), std::invalid_argument);
  CHECK_THROWS_AS(dissim(*parity, *parity, 10, 11), std::invalid_argument);
}

TEST_CASE("dissimilarity is symmetric and takes the window maximum", "[approx]") {
  const auto a = named_language("LAST_BIT", 1000);
  const auto b = named_language("EVEN_LENGTH", 1000);
  const DissimEstimate ab = dissim(*a, *b, 300, 20);
  const DissimEstimate ba = dissim(*b, *a, 300, 20);
  CHECK(ab.value == ba.value);
  Rational best = 0;
  for (std::uint64_t n = 20; n <= 300; ++n) {
    long long diff = 0;
    for (std::uint64_t i = 0; i < n; ++i) diff += a->contains(i) != b->contains(i);
    best = std::max(best, Rational(diff, static_cast<long long>(n)));
  }
  CHECK(ab.value == best);
}

TEST_CASE("chameleon governing index is constant on each super-round", "[approx]") {
  CHECK(chameleon_governing_index(0) == 0);
  for (std::uint64_t y = 1; y <= 7; ++y)
    for (std::uint64_t r = fact(y); r < fact(y + 1); ++r) REQUIRE(chameleon_governing_index(r) == triangle(y));
}

TEST_CASE("chameleon tracks its governing machine at super-round ends", "[approx]") {
  const MachineEnumeration en(EnumerationKind::LibraryFirst);
  const auto cham = chameleon_language(1000, en);
  const auto inap = inapproximable_language(1000, en);
  for (std::uint64_t y = 2; y <= 6; ++y) {
    const std::uint64_t end = fact(y + 1);
    const auto lg = machine_language(en.at(triangle(y)), 1000);
    const Rational close = dissim(*cham, *lg, end, end).value;
    const Rational far = dissim(*inap, *lg, end, end).value;
    CHECK(close <= Rational(2, static_cast<long long>(y)));
    CHECK(far >= 1 - Rational(2, static_cast<long long>(y)));
  }
}

TEST_CASE("superround liminf respects the governed filter", "[approx]") {
  const auto parity = named_language("PARITY", 1000);
  const DissimEstimate d = dissim(*empty_language(), *parity, 720, 1);
  CHECK(superround_liminf(d, 1).has_value());
  CHECK_FALSE(superround_liminf(d, 1000).has_value());
  // Ends 2, 6, 24, 120, 720 are governed by triangle(1..5) = 0, 1, 0, 1, 2.
  const auto g2 = superround_liminf(d, 1, 2);
  REQUIRE(g2.has_value());
  CHECK(*g2 == Rational(static_cast<long long>(d.differences[719]), 720));
}

TEST_CASE("the zero-one mixture breaks even", "[approx]") {
  const MixedStrategy zo = zero_one_mixture();
  const MixedStrategy zeros = MixedStrategy::point(machine_strategy(named("ALL_ZEROS").program, 1000, "ALL_ZEROS"));
  CHECK(play_mixed(zeros, zo, 100, 50).s_ne == Rational(1, 2));
  CHECK(play_mixed(zo, zo, 100, 50).s_ne == Rational(1, 2));
}
