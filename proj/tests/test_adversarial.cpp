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

#include "imp/adversarial.hpp"
#include "imp/approx.hpp"
#include "imp/learner.hpp"

using namespace imp;

namespace {

Alg1Config default_config(std::uint64_t fuel = 1000) { return Alg1Config::from_names(default_alg1_names(), fuel); }

}  // namespace

TEST_CASE("alg1 answers membership in L_d, d = ones in the history", "[adversarial]") {
  const auto cfg = default_config();
  const StrategyPtr s = alg1_strategy(cfg);
  // d = 0: ALL_ZEROS rejects everything.
  CHECK(s->respond(parse_word("000")).bit == 0);
  // d = 1: ALL_ONES.
  CHECK(s->respond(parse_word("0100")).bit == 1);
  // d = 2: PARITY of the history (two ones, even).
  CHECK(s->respond(parse_word("0101")).bit == 0);
  // d > X accepts.
  CHECK(s->respond(Word(9, 1)).bit == 1);
}

TEST_CASE("alg1 evader indexes by its own losses and negates", "[adversarial]") {
  const auto cfg = default_config();
  const StrategyPtr s = alg1_evader_strategy(cfg);
  // No zeros: d = 0, not in ALL_ZEROS.
  CHECK(s->respond(parse_word("111")).bit == 1);
  // One zero: d = 1, not in ALL_ONES.
  CHECK(s->respond(parse_word("110")).bit == 0);
  // Beyond the list: 0.
  CHECK(s->respond(Word(9, 0)).bit == 0);
}

TEST_CASE("alg1 locks on to every listed language", "[adversarial]") {
  const auto cfg = default_config();
  const auto names = default_alg1_names();
  for (std::size_t x = 0; x < names.size(); ++x) {
    const StrategyPtr lx = machine_strategy(named(names[x]).program, 1000, names[x]);
    const Transcript t = play(*alg1_strategy(cfg), *lx, 300);
    CHECK(t.losses_eq() <= x);
    const Transcript m = play(*lx, *alg1_evader_strategy(cfg), 300);
    CHECK(m.rounds() - m.losses_eq() <= x);
  }
}

TEST_CASE("alg1 rejects a partial machine that runs out of fuel", "[adversarial]") {
  Alg1Config cfg = Alg1Config::from_names({"LOOP"}, 50);
  const StrategyPtr s = alg1_strategy(cfg);
  CHECK_THROWS_AS(s->respond(Word{}), ConfigurationError);
  CHECK_THROWS_AS(alg1_strategy(Alg1Config{}), ConfigurationError);
}

TEST_CASE("alg2 loses at most x rounds against T_x", "[adversarial]") {
  for (MachineIndex x = 0; x <= 30; ++x) {
    const Transcript t = play(*alg2_strategy(2000), *machine_strategy(x, 2000), 600);
    REQUIRE(t.losses_eq() <= x);
  }
}

TEST_CASE("alg2 is the same strategy under both players' fuel", "[adversarial]") {
  // After d losses alg2 simulates T_d; against T_d itself it never loses.
  const Transcript t = play(*alg2_strategy(500), *machine_strategy(0, 500), 100);
  CHECK(t.losses_eq() == 0);
}

TEST_CASE("red herring makes every round a loss for its target", "[adversarial]") {
  std::vector<StrategyPtr> targets{constant_strategy(0), constant_strategy(1), alg2_strategy(500),
                                   alg1_strategy(default_config()), alg3_pure_strategy(1, 1, 300),
                                   prob_learner_strategy(3, 300)};
  for (const auto& t : targets) {
    const Transcript tr = play(*t, *red_herring(t), 120);
    REQUIRE(tr.losses_eq() == 120);
  }
}

TEST_CASE("red herring is nonadaptive", "[adversarial]") {
  const StrategyPtr rh = red_herring(alg2_strategy(500));
  CHECK(rh->nonadaptive());
  for (std::size_t n = 0; n < 40; ++n) {
    Word a(n, 0), b(n, 1);
    if (n) a[n / 2] = 1;
    REQUIRE(rh->respond(a).bit == rh->respond(b).bit);
  }
}
