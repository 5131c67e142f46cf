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

// Adversarial players: the hypothesis-switching pursuer over a hardcoded
// list of total machines and its evading twin, the universal pursuer that
// counts its own losses to index the machine enumeration, and the red
// herring evader that defeats any fixed pursuer.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "imp/game.hpp"
#include "imp/library.hpp"
#include "imp/machine.hpp"

namespace imp {

class ConfigurationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::size_t count_ones(WordView w) { return static_cast<std::size_t>(std::count(w.begin(), w.end(), Bit{1})); }
inline std::size_t count_zeros(WordView w) { return w.size() - count_ones(w); }

struct Alg1Config {
  std::vector<Program> machines;  // L_0 .. L_X; each must halt on every probed word
  std::uint64_t fuel = 10000;

  std::size_t max_index() const { return machines.empty() ? 0 : machines.size() - 1; }

  static Alg1Config from_names(const std::vector<std::string>& names, std::uint64_t fuel) {
    Alg1Config cfg;
    cfg.fuel = fuel;
    for (const auto& n : names) cfg.machines.push_back(named(n).program);
    return cfg;
  }
};

// The eight total languages used by default.
inline std::vector<std::string> default_alg1_names() {
  return {"ALL_ZEROS", "ALL_ONES", "PARITY", "LAST_BIT", "EVEN_LENGTH", "FIRST_BIT", "HAS_ONE", "EVEN_ONES"};
}

namespace detail {

class Alg1Strategy final : public Strategy {
 public:
  Alg1Strategy(Alg1Config cfg, bool evader) : cfg_(std::move(cfg)), evader_(evader) {
    if (cfg_.machines.empty()) throw ConfigurationError("alg1: machine list is empty");
  }

  Response respond(WordView history) const override {
    // The pursuer counts its losses (ones); the evader counts its own losses (zeros).
    const std::size_t d = evader_ ? count_zeros(history) : count_ones(history);
    if (d > cfg_.max_index()) return {static_cast<Bit>(evader_ ? 0 : 1), false};
    const RunOutcome out = run(cfg_.machines[d], history, cfg_.fuel);
    if (!out.halted())
      throw ConfigurationError("alg1: listed machine " + std::to_string(d) + " exhausted fuel on a probed word");
    const bool member = out.accepted();
    return {static_cast<Bit>(member != evader_), false};
  }

  std::string describe() const override { return evader_ ? "alg1-evader" : "alg1"; }

 private:
  Alg1Config cfg_;
  bool evader_;
};

class Alg2Strategy final : public Strategy {
 public:
  Alg2Strategy(std::uint64_t fuel, MachineEnumeration enumeration) : fuel_(fuel), enumeration_(enumeration) {}

  Response respond(WordView history) const override {
    const std::size_t d = count_ones(history);
    const RunOutcome out = run(decode(enumeration_.at(d)), history, fuel_);
    return {static_cast<Bit>(out.accepted()), out.verdict == Verdict::FuelExhausted};
  }

  std::string describe() const override { return "alg2"; }

 private:
  std::uint64_t fuel_;
  MachineEnumeration enumeration_;
};

class RedHerringStrategy final : public Strategy {
 public:
  explicit RedHerringStrategy(StrategyPtr target) : target_(std::move(target)) {
    if (!target_) throw std::invalid_argument("red_herring: null target");
  }

  Response respond(WordView history) const override {
    const Word probe(history.size(), Bit{1});
    const Response r = target_->respond(probe);
    return {static_cast<Bit>(1 - r.bit), r.exhausted};
  }

  std::string describe() const override { return "red-herring(" + target_->describe() + ")"; }
  bool nonadaptive() const override { return true; }

 private:
  StrategyPtr target_;
};

}  // namespace detail

// Pursuer: d = number of ones in the history; d > X accepts, otherwise
// answers membership in L_d.
inline StrategyPtr alg1_strategy(Alg1Config cfg) { return std::make_shared<detail::Alg1Strategy>(std::move(cfg), false); }

// Evader: the same walk over the list driven by its own loss count (zeros in
// the history), answering the negated membership; beyond the list it answers 0.
inline StrategyPtr alg1_evader_strategy(Alg1Config cfg) {
  return std::make_shared<detail::Alg1Strategy>(std::move(cfg), true);
}

// Universal pursuer: simulate T_d on the history with d = number of ones.
inline StrategyPtr alg2_strategy(std::uint64_t fuel, MachineEnumeration enumeration = MachineEnumeration()) {
  return std::make_shared<detail::Alg2Strategy>(fuel, enumeration);
}

// Nonadaptive evader whose round-k bit negates target's answer on 1^{k-1}.
inline StrategyPtr red_herring(StrategyPtr target) { return std::make_shared<detail::RedHerringStrategy>(std::move(target)); }

}  // namespace imp
