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

#include <random>

#include "imp/game.hpp"
#include "imp/library.hpp"

using namespace imp;

namespace {

// Running means by brute force, compared as exact fractions.
std::pair<Rational, Rational> brute_extremes(const Word& bits, std::size_t tail) {
  std::optional<Rational> lo, hi;
  for (std::size_t n = tail; n <= bits.size(); ++n) {
    long long ones = 0;
    for (std::size_t i = 0; i < n; ++i) ones += bits[i];
    const Rational a(ones, static_cast<long long>(n));
    if (!lo || a < *lo) lo = a;
    if (!hi || a > *hi) hi = a;
  }
  return {*lo, *hi};
}

StrategyPtr history_parity() {
  return std::make_shared<FunctionStrategy>(
      [](WordView h) {
        Bit p = 0;
        for (Bit b : h) p ^= b;
        return Response{p, false};
      },
      "history-parity");
}

}  // namespace

TEST_CASE("all-ones delta pays the '!=' player 1", "[game]") {
  const Word d(100, 1);
  const PayoffEstimate p = payoff(d, 50);
  CHECK(p.liminf_est == 1);
  CHECK(p.limsup_est == 1);
  CHECK(p.s_ne == 1);
  CHECK(p.s_eq == 0);
}

TEST_CASE("alternating delta matches the running-mean table", "[game]") {
  Word d;
  for (int i = 0; i < 50; ++i) {
    d.push_back(1);
    d.push_back(0);
  }
  const PayoffEstimate p = payoff(d, 50);
  const auto [lo, hi] = brute_extremes(d, 50);
  CHECK(p.liminf_est == lo);
  CHECK(p.limsup_est == hi);
  CHECK(lo == Rational(1, 2));
  CHECK(hi == Rational(26, 51));
  CHECK(p.s_ne == (lo + hi) / 2);
}

TEST_CASE("payoff rejects tail windows outside the horizon", "[game]") {
  const Word d(10, 0);
  CHECK_THROWS_AS(payoff(d, 0), std::invalid_argument);
  CHECK_THROWS_AS(payoff(d, 11), std::invalid_argument);
  CHECK_NOTHROW(payoff(d, 10));
}

TEST_CASE("payoff extremes agree with brute force on random deltas", "[game]") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    Word d(1 + rng() % 120);
    for (auto& b : d) b = static_cast<Bit>(rng() % 3 == 0);
    const std::size_t tail = 1 + rng() % d.size();
    const PayoffEstimate p = payoff(d, tail);
    const auto [lo, hi] = brute_extremes(d, tail);
    REQUIRE(p.liminf_est == lo);
    REQUIRE(p.limsup_est == hi);
    REQUIRE(p.s_eq + p.s_ne == 1);
  }
}

TEST_CASE("play records both outputs and their xor", "[game]") {
  const Transcript t = play(*constant_strategy(1), *history_parity(), 6);
  // The only 1 in delta is the first round, so parity stays 1 afterwards.
  CHECK(format_word(t.o_eq) == "111111");
  CHECK(format_word(t.o_ne) == "011111");
  CHECK(format_word(t.delta) == "100000");
  CHECK(t.losses_eq() == 1);
  CHECK_THROWS_AS(play(*constant_strategy(0), *constant_strategy(0), 0), std::invalid_argument);
}

TEST_CASE("machine strategies flag fuel exhaustion and answer 0", "[game]") {
  const StrategyPtr loop = machine_strategy(named("LOOP").program, 20, "loop");
  const Transcript t = play(*loop, *constant_strategy(1), 5);
  CHECK(format_word(t.o_eq) == "00000");
  CHECK(t.fuel_flags_eq() == 5);
  CHECK(t.fuel_flags_ne() == 0);
}

TEST_CASE("transcript digests are deterministic and content-sensitive", "[game]") {
  const auto a = play(*machine_strategy(named("PARITY").program, 100, "p"), *history_parity(), 64);
  const auto b = play(*machine_strategy(named("PARITY").program, 100, "p"), *history_parity(), 64);
  const auto c = play(*machine_strategy(named("PARITY").program, 100, "p"), *history_parity(), 65);
  CHECK(transcript_digest(a) == transcript_digest(b));
  CHECK(transcript_digest(a) != transcript_digest(c));
  CHECK(hex64(fnv1a("")) == "cbf29ce484222325");
  CHECK(hex64(fnv1a("a")) == "af63dc4c8601ec8c");
}

TEST_CASE("mixed strategies validate their weights", "[game]") {
  CHECK_THROWS_AS(MixedStrategy(std::vector<Atom>{}), std::invalid_argument);
  CHECK_THROWS_AS(MixedStrategy({{constant_strategy(0), Rational(1, 3)}}), std::invalid_argument);
  CHECK_THROWS_AS(MixedStrategy({{constant_strategy(0), Rational(0)}, {constant_strategy(1), Rational(1)}}),
                  std::invalid_argument);
  CHECK_NOTHROW(MixedStrategy({{constant_strategy(0), Rational(1, 3)}, {constant_strategy(1), Rational(2, 3)}}));
}

TEST_CASE("play_mixed is the exact weighted average", "[game]") {
  const MixedStrategy eq({{constant_strategy(0), Rational(1, 3)}, {constant_strategy(1), Rational(2, 3)}});
  const MixedStrategy ne = MixedStrategy::point(history_parity());
  const PayoffEstimate e = play_mixed(eq, ne, 40, 20);
  const PayoffEstimate p0 = payoff(play(*constant_strategy(0), *history_parity(), 40), 20);
  const PayoffEstimate p1 = payoff(play(*constant_strategy(1), *history_parity(), 40), 20);
  CHECK(e.s_ne == Rational(1, 3) * p0.s_ne + Rational(2, 3) * p1.s_ne);
  CHECK(e.s_eq + e.s_ne == 1);
  CHECK(e.limsup_est == Rational(1, 3) * p0.limsup_est + Rational(2, 3) * p1.limsup_est);
}

TEST_CASE("game matrix takes row maxima and column minima", "[game]") {
  const std::vector<MixedStrategy> set{MixedStrategy::point(constant_strategy(0)),
                                       MixedStrategy::point(constant_strategy(1))};
  const GameMatrix m = empirical_game_matrix(set, set, 10, 5);
  CHECK(m.cells[0][0].s_ne == 0);
  CHECK(m.cells[0][1].s_ne == 1);
  CHECK(m.cells[1][0].s_ne == 1);
  CHECK(m.cells[1][1].s_ne == 0);
  CHECK(m.minmax_est == 1);
  CHECK(m.maxmin_est == 0);
}
