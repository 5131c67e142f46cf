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

// Randomised properties over a fixed-seed generator.

#include <catch_amalgamated.hpp>

#include <random>

#include "imp/imp.hpp"

using namespace imp;

namespace {

constexpr std::uint64_t kSeed = 20260914;

Word random_word(std::mt19937_64& rng, std::size_t max_len) {
  Word w(rng() % (max_len + 1));
  for (auto& b : w) b = static_cast<Bit>(rng() & 1);
  return w;
}

MachineIndex random_index(std::mt19937_64& rng) { return rng() % 200000; }

}  // namespace

TEST_CASE("decode and encode are inverse on random indices", "[property]") {
  std::mt19937_64 rng(kSeed);
  for (int i = 0; i < 2000; ++i) {
    const MachineIndex x = rng() % 5'000'000;
    REQUIRE(encode(decode(x)) == x);
  }
}

TEST_CASE("shortlex rank and unrank are inverse", "[property]") {
  std::mt19937_64 rng(kSeed + 1);
  for (int i = 0; i < 2000; ++i) {
    const Word w = random_word(rng, 40);
    REQUIRE(word_at(rank_of(w)) == w);
  }
}

TEST_CASE("payoff shares sum to one and the window is ordered", "[property]") {
  std::mt19937_64 rng(kSeed + 2);
  for (int i = 0; i < 500; ++i) {
    Word d = random_word(rng, 200);
    if (d.empty()) d.push_back(0);
    const PayoffEstimate p = payoff(d, 1 + rng() % d.size());
    REQUIRE(p.s_eq + p.s_ne == 1);
    REQUIRE(p.liminf_est <= p.limsup_est);
    REQUIRE(p.liminf_est >= 0);
    REQUIRE(p.limsup_est <= 1);
  }
}

TEST_CASE("delta is the xor of the two outputs", "[property]") {
  std::mt19937_64 rng(kSeed + 3);
  for (int i = 0; i < 100; ++i) {
    const auto a = machine_strategy(random_index(rng), 300);
    const auto b = machine_strategy(random_index(rng), 300);
    const Transcript t = play(*a, *b, 60);
    for (std::size_t r = 0; r < t.rounds(); ++r) REQUIRE(t.delta[r] == (t.o_eq[r] ^ t.o_ne[r]));
    REQUIRE(payoff(t, 30).s_eq + payoff(t, 30).s_ne == 1);
  }
}

TEST_CASE("dovetail reaches a target iff enough words are accepted", "[property]") {
  std::mt19937_64 rng(kSeed + 4);
  for (int i = 0; i < 300; ++i) {
    const Program p = decode(random_index(rng));
    std::vector<Word> words(1 + rng() % 12);
    for (auto& w : words) w = random_word(rng, 10);
    std::size_t accepted = 0;
    for (const auto& w : words) accepted += accepts(p, w, 400);
    const std::size_t target = rng() % (words.size() + 1);
    REQUIRE(dovetail(p, words, target, 400).reached_target == (accepted >= target));
  }
}

TEST_CASE("dissimilarity obeys the triangle inequality", "[property]") {
  std::mt19937_64 rng(kSeed + 5);
  std::vector<LanguagePtr> pool;
  for (const auto& m : library()) pool.push_back(machine_language(m.program, 300, m.name));
  for (int i = 0; i < 6; ++i) pool.push_back(machine_language(random_index(rng), 300));
  pool.push_back(chameleon_language(300));
  for (int i = 0; i < 60; ++i) {
    const auto& a = pool[rng() % pool.size()];
    const auto& b = pool[rng() % pool.size()];
    const auto& c = pool[rng() % pool.size()];
    const std::uint64_t n = 200, tail = 1 + rng() % n;
    REQUIRE(dissim(*a, *c, n, tail).value <= dissim(*a, *b, n, tail).value + dissim(*b, *c, n, tail).value);
  }
}

TEST_CASE("learners answer arbitrary histories consistently", "[property]") {
  std::mt19937_64 rng(kSeed + 6);
  const auto a = alg3_pure_strategy(1, 1, 300);
  const auto b = alg3_pure_strategy(1, 1, 300);
  const auto pa = prob_learner_strategy(5, 300);
  const auto pb = prob_learner_strategy(5, 300);
  for (int i = 0; i < 40; ++i) {
    const Word h = random_word(rng, 150);
    REQUIRE(a->respond(h).bit == b->respond(h).bit);
    REQUIRE(pa->respond(h).bit == pb->respond(h).bit);
  }
}

TEST_CASE("red herring defeats random machines every round", "[property]") {
  std::mt19937_64 rng(kSeed + 7);
  for (int i = 0; i < 60; ++i) {
    const auto target = machine_strategy(random_index(rng), 300);
    REQUIRE(play(*target, *red_herring(target), 50).losses_eq() == 50);
  }
}
