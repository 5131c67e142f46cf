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

// The acceptance suite: eleven pinned experiments, each reduced to one
// pass/fail verdict with the expected and observed values.
//
// Reference values come from oracles written here, not from the code under
// test: an explicit triangular walk, brute-force membership counts, and
// slot claiming by direct overlap checks.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <future>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "imp/adversarial.hpp"
#include "imp/approx.hpp"
#include "imp/game.hpp"
#include "imp/harness.hpp"
#include "imp/learner.hpp"
#include "imp/library.hpp"

namespace imp {

struct CriterionResult {
  int id = 0;
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
  double seconds = 0;
};

namespace acceptance {

inline constexpr std::uint64_t kLearnFuel = 1000;
inline constexpr std::size_t kLearnRounds = 4096;

// ---------------------------------------------------------------------------
// Oracles

inline std::uint64_t walk_triangle(std::uint64_t x) {
  std::uint64_t row = 0;
  while (x > row) {
    x -= row + 1;
    ++row;
  }
  return x;
}

// Slots a with a^2 < limit that survive explicit overlap checks against
// earlier claimed slots of the given width.
inline std::vector<std::uint64_t> claimed_slots(unsigned width, std::uint64_t limit) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t a = 0; a * a < limit; ++a) {
    bool overlaps = false;
    for (std::uint64_t b : out) overlaps = overlaps || (a * a < b * b + width && b * b < a * a + width);
    if (!overlaps) out.push_back(a);
  }
  return out;
}

inline std::uint64_t first_slot(std::uint64_t h, unsigned width) {
  for (std::uint64_t limit = 64;; limit *= 4)
    for (std::uint64_t a : claimed_slots(width, limit))
      if (walk_triangle(a) == h) return a;
}

inline Bit co_bit(const Program& p, std::uint64_t position, std::uint64_t fuel) {
  return static_cast<Bit>(run(p, word_at(position), fuel).accepted() ? 0 : 1);
}

inline std::size_t direct_count(const Program& p, const std::vector<Position>& positions, std::uint64_t fuel) {
  std::size_t n = 0;
  for (Position x : positions) n += run(p, word_at(x), fuel).accepted();
  return n;
}

inline std::string fmt(const Rational& r) {
  std::ostringstream os;
  os << r.str() << " (" << std::setprecision(4) << to_double(r) << ")";
  return os.str();
}

// ---------------------------------------------------------------------------

inline CriterionResult loss_bound_alg2() {
  CriterionResult r{1, "alg2 loses at most x rounds against T_x", "losses <= x for x = 0..50 at N = 10000, fuel 10^4", "",
                    false};
  constexpr std::uint64_t fuel = 10000;
  constexpr std::size_t rounds = 10000;
  std::vector<std::size_t> losses(51);
  std::vector<std::future<void>> jobs;
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<std::uint64_t> next{0};
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&] {
      for (std::uint64_t x = next++; x <= 50; x = next++) {
        const StrategyPtr pursuer = alg2_strategy(fuel, MachineEnumeration(EnumerationKind::Godel));
        const StrategyPtr target = machine_strategy(x, fuel);
        losses[x] = play(*pursuer, *target, rounds).losses_eq();
      }
    }));
  }
  for (auto& j : jobs) j.get();
  std::size_t violations = 0, worst_x = 0, total = 0;
  for (std::uint64_t x = 0; x <= 50; ++x) {
    total += losses[x];
    if (losses[x] > x) {
      ++violations;
      worst_x = x;
    }
  }
  r.pass = violations == 0;
  r.observed = std::to_string(violations) + " violations, " + std::to_string(total) + " losses over 51 games";
  if (violations) r.observed += ", e.g. x = " + std::to_string(worst_x);
  return r;
}

inline CriterionResult alg1_lock_on() {
  CriterionResult r{2, "alg1 locks on; its evader mirrors it",
                    "losses <= x, none after lock-on; evader s_ne = 1 at N = 500", "", false};
  const std::uint64_t fuel = 10000;
  const auto names = default_alg1_names();
  const Alg1Config cfg = Alg1Config::from_names(names, fuel);
  bool ok = true;
  std::size_t exact_one = 0;
  std::ostringstream obs;
  for (std::size_t x = 0; x < names.size(); ++x) {
    const StrategyPtr lx = machine_strategy(named(names[x]).program, fuel, names[x]);
    const Transcript t = play(*alg1_strategy(cfg), *lx, 1000);
    std::size_t d = 0, lock = t.delta.size();
    for (std::size_t i = 0; i < t.delta.size(); ++i) {
      if (d == x && lock == t.delta.size()) lock = i;
      d += t.delta[i];
    }
    if (lock == t.delta.size()) {
      lock = 0;
      for (std::size_t i = 0; i < t.delta.size(); ++i)
        if (t.delta[i]) lock = i + 1;
    }
    const bool after_clean = std::none_of(t.delta.begin() + static_cast<long>(lock), t.delta.end(), [](Bit b) { return b; });
    const bool bound = t.losses_eq() <= x;

    const Transcript m = play(*lx, *alg1_evader_strategy(cfg), 500);
    const PayoffEstimate p = payoff(m, default_tail_start(500));
    const std::size_t evader_losses = m.delta.size() - m.losses_eq();
    const bool mirrored = p.s_ne == 1 && evader_losses <= x;
    exact_one += p.s_ne == 1;
    ok = ok && bound && after_clean && mirrored;
    obs << (x ? " " : "") << names[x] << ":" << t.losses_eq() << "/" << evader_losses << "/" << p.s_ne.str();
  }
  r.pass = ok;
  r.observed = "pursuer losses/evader losses/evader s_ne " + obs.str() + "; s_ne = 1 in " + std::to_string(exact_one) +
               " of " + std::to_string(names.size());
  return r;
}

inline std::vector<std::pair<std::string, StrategyPtr>> red_herring_targets() {
  const std::uint64_t fuel = kLearnFuel;
  std::vector<std::pair<std::string, StrategyPtr>> out;
  out.emplace_back("zeros", constant_strategy(0));
  out.emplace_back("ones", constant_strategy(1));
  out.emplace_back("alg2", alg2_strategy(fuel));
  out.emplace_back("alg1", alg1_strategy(Alg1Config::from_names(default_alg1_names(), fuel)));
  out.emplace_back("lang:PARITY", machine_strategy(named("PARITY").program, fuel, "lang:PARITY"));
  out.emplace_back("na:HAS_ONE", na_wrap(named_language("HAS_ONE", fuel)));
  out.emplace_back("alg3:j=0,k=1", alg3_pure_strategy(0, 1, fuel));
  out.emplace_back("alg3:j=3,k=1", alg3_pure_strategy(3, 1, fuel));
  out.emplace_back("alg3:j=9,k=2", alg3_pure_strategy(9, 2, fuel));
  out.emplace_back("prob:seed=7", prob_learner_strategy(7, fuel));
  return out;
}

inline CriterionResult red_herring_universality() {
  CriterionResult r{3, "red herring defeats every registered strategy", "delta = 1^200 for 10 targets", "", false};
  std::size_t beaten = 0;
  std::string failed;
  const auto targets = red_herring_targets();
  for (const auto& [name, t] : targets) {
    const Transcript tr = play(*t, *red_herring(t), 200);
    if (tr.losses_eq() == 200) ++beaten;
    else failed += " " + name;
  }
  r.pass = beaten == targets.size();
  r.observed = std::to_string(beaten) + "/" + std::to_string(targets.size()) + " all-ones" +
               (failed.empty() ? "" : ", failed:" + failed);
  return r;
}

// One correct-atom run against NA(co-L(T)).
struct LearnerRun {
  std::string evader;
  std::uint64_t h_star = 0;
  std::uint64_t atom = 0;
  Transcript transcript;
  LearnerState state;
  std::vector<DecodedBlock> decoded;
  std::vector<Rational> atom_s_eq;  // all four atoms
};

inline std::vector<std::string> pinned_evaders() { return {"PARITY", "LAST_BIT", "ALL_ZEROS"}; }

inline LearnerRun learner_run(const std::string& name) {
  const MachineEnumeration en(EnumerationKind::LibraryFirst);
  const NamedMachine& target = named(name);
  std::uint64_t h_star = 0;
  while (en.at(h_star) != target.index) ++h_star;
  const std::uint64_t a = first_slot(h_star, 2);
  const Bit b0 = co_bit(target.program, a * a, kLearnFuel);
  const Bit b1 = co_bit(target.program, a * a + 1, kLearnFuel);
  const std::uint64_t atom = b0 | (std::uint64_t{b1} << 1);

  const StrategyPtr evader = na_wrap(complement(machine_language(target.program, kLearnFuel, name)));
  std::vector<Rational> s_eq(4);
  std::optional<LearnerRun> run;
  for (std::uint64_t j = 0; j < 4; ++j) {
    auto learner = alg3_pure_strategy(j, 1, kLearnFuel, en);
    Transcript t = play(*learner, *evader, kLearnRounds);
    s_eq[j] = payoff(t, default_tail_start(kLearnRounds)).s_eq;
    if (j == atom) {
      LearnerState st = learner->state_after(t.delta);
      auto decoded = learner->decode_chain(t.delta, h_star);
      run.emplace(LearnerRun{name, h_star, atom, std::move(t), std::move(st), std::move(decoded), {}});
    }
  }
  run->atom_s_eq = s_eq;
  return *run;
}

inline CriterionResult correct_atom_confinement(const std::vector<LearnerRun>& runs) {
  CriterionResult r{4, "correct atom loses only on admissible rounds",
                    "losses inside admissible set; loss density <= analytic bound", "", false};
  bool ok = true;
  std::ostringstream obs;
  for (const auto& run : runs) {
    const std::size_t n = run.transcript.delta.size();
    const Chain* chain = run.state.chain(run.h_star);
    bool alive = chain && run.state.active() == run.h_star;
    std::set<Position> wins;
    std::uint64_t completed = 0;
    if (chain) {
      for (std::uint64_t t = 0; t < chain->blocks.size(); ++t) {
        const auto& block = chain->blocks[t];
        const std::uint64_t m = encoding_width(t);
        for (std::uint64_t idx = 0; idx + m < block.size(); ++idx)
          if (block[idx] < n) wins.insert(block[idx]);
        if (block.back() < n) completed = t;
      }
    }
    std::size_t stray = 0, losses = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (!run.transcript.delta[i]) continue;
      ++losses;
      if (wins.contains(i)) ++stray;
    }
    // Positions reserved for other hypotheses below the horizon.
    std::size_t reserved = 0;
    for (std::uint64_t a : claimed_slots(2, n))
      if (walk_triangle(a) != run.h_star)
        for (std::uint64_t p = a * a; p < a * a + 2; ++p) reserved += p < n;
    Rational bound(static_cast<long long>(reserved), static_cast<long long>(n));
    for (std::uint64_t t = 0; t <= completed; ++t)
      bound += Rational(static_cast<long long>(encoding_width(t + 1)), static_cast<long long>(1ULL << encoding_width(t)));
    const Rational density(static_cast<long long>(losses), static_cast<long long>(n));
    const Rational admissible(static_cast<long long>(n - wins.size()), static_cast<long long>(n));
    const bool pass = alive && stray == 0 && density <= bound;
    ok = ok && pass;
    obs << (obs.tellp() ? "; " : "") << run.evader << ": h*=" << run.h_star << " j=" << run.atom
        << (alive ? "" : " NOT-ACTIVE") << " stray=" << stray << " density=" << std::setprecision(4) << to_double(density)
        << " admissible=" << to_double(admissible) << " bound=" << to_double(bound);
  }
  r.pass = ok;
  r.observed = obs.str();
  return r;
}

inline CriterionResult mixture_bound(const std::vector<LearnerRun>& runs) {
  CriterionResult r{5, "4-atom mixture earns at least 1/4", "exact expected s_eq >= 1/4 for each pinned evader", "", false};
  bool ok = true;
  std::ostringstream obs;
  for (const auto& run : runs) {
    Rational mean = 0;
    for (const auto& s : run.atom_s_eq) mean += s / 4;
    ok = ok && mean >= Rational(1, 4);
    obs << (obs.tellp() ? "; " : "") << run.evader << ": " << fmt(mean);
  }
  r.pass = ok;
  r.observed = obs.str();
  return r;
}

inline CriterionResult protocol_oracle(const std::vector<LearnerRun>& runs) {
  CriterionResult r{6, "transcript-decoded counts match the oracle", "zero mismatches over all decoded blocks", "", false};
  std::size_t blocks = 0, mismatches = 0;
  const MachineEnumeration en(EnumerationKind::LibraryFirst);
  for (const auto& run : runs) {
    const Program p = decode(en.at(run.h_star));
    for (const auto& d : run.decoded) {
      ++blocks;
      std::vector<Word> words;
      for (Position x : d.positions) words.push_back(word_at(x));
      const std::size_t searched = binary_search_count(p, words, kLearnFuel);
      const std::size_t direct = direct_count(p, d.positions, kLearnFuel);
      if (!d.terminated || d.count != searched || d.count != direct) ++mismatches;
    }
  }
  r.pass = blocks > 0 && mismatches == 0;
  r.observed = std::to_string(mismatches) + " mismatches over " + std::to_string(blocks) + " blocks";
  return r;
}

inline CriterionResult probabilistic_learner() {
  CriterionResult r{7, "probabilistic learner succeeds per revisit", "fraction(loss density < 0.2) >= 1 - (3/4)^R - 0.1",
                    "", false};
  const std::string name = "PARITY";
  const NamedMachine& target = named(name);
  const StrategyPtr evader = na_wrap(complement(machine_language(target.program, kLearnFuel, name)));
  constexpr int seeds = 64;
  std::vector<int> good(seeds, 0);
  std::vector<std::uint64_t> rev(seeds, 0);
  std::vector<std::future<void>> jobs;
  const unsigned workers = std::max(1u, std::thread::hardware_concurrency());
  std::atomic<int> next{0};
  for (unsigned w = 0; w < workers; ++w) {
    jobs.push_back(std::async(std::launch::async, [&] {
      for (int s = next++; s < seeds; s = next++) {
        auto learner = prob_learner_strategy(static_cast<std::uint64_t>(s), kLearnFuel);
        const Transcript t = play(*learner, *evader, kLearnRounds);
        good[s] = t.losses_eq() * 5 < kLearnRounds;
        rev[s] = revisits(learner->state_after(t.delta), learner->config(), target.index);
      }
    }));
  }
  for (auto& j : jobs) j.get();
  const int succeeded = std::accumulate(good.begin(), good.end(), 0);
  const std::uint64_t R = *std::min_element(rev.begin(), rev.end());
  const double mean_rev = std::accumulate(rev.begin(), rev.end(), 0.0) / seeds;
  const double frac = static_cast<double>(succeeded) / seeds;
  const double need = 1.0 - std::pow(0.75, static_cast<double>(R)) - 0.1;
  r.pass = frac >= need;
  std::ostringstream obs;
  obs << succeeded << "/64 = " << frac << ", R = " << R << " (mean " << mean_rev << "), threshold " << need;
  r.observed = obs.str();
  return r;
}

inline CriterionResult zero_sum_identity() {
  CriterionResult r{8, "s_eq + s_ne = 1", "exact on 1000 random pairs", "", false};
  std::mt19937_64 rng(20260101);
  const std::uint64_t fuel = 200;
  auto random_strategy = [&]() -> StrategyPtr {
    switch (rng() % 5) {
      case 0: return constant_strategy(static_cast<Bit>(rng() & 1));
      case 1: return machine_strategy(rng() % 5000, fuel);
      case 2: return na_wrap(machine_language(library()[rng() % library().size()].program, fuel, "lib"));
      case 3: return alg2_strategy(fuel);
      default: {
        const std::uint64_t seed = rng();
        return std::make_shared<FunctionStrategy>(
            [seed](WordView h) {
              return Response{static_cast<Bit>(counter_rng(seed, h.size() * 2 + (h.empty() ? 0 : h.back())) & 1), false};
            },
            "random");
      }
    }
  };
  int exact = 0;
  for (int i = 0; i < 1000; ++i) {
    const StrategyPtr a = random_strategy(), b = random_strategy();
    const std::size_t rounds = 1 + rng() % 300;
    const std::size_t tail = 1 + rng() % rounds;
    const PayoffEstimate p = payoff(play(*a, *b, rounds), tail);
    exact += p.s_eq + p.s_ne == 1;
  }
  r.pass = exact == 1000;
  r.observed = std::to_string(exact) + "/1000 exact";
  return r;
}

inline CriterionResult dissimilarity_suite() {
  CriterionResult r{9, "dissimilarity pseudometric and chameleon",
                    "d(L,L)=0, d(empty,complete)=1, triangle inequality, chameleon liminf <= 1/5, d(inapprox,chameleon)=1",
                    "", false};
  const std::uint64_t fuel = 1000;
  const MachineEnumeration en(EnumerationKind::LibraryFirst);
  std::vector<LanguagePtr> pool{empty_language(), complete_language(), chameleon_language(fuel),
                                inapproximable_language(fuel)};
  for (const auto& m : library()) {
    pool.push_back(machine_language(m.program, fuel, m.name));
    pool.push_back(complement(machine_language(m.program, fuel, m.name)));
  }
  bool self = true;
  for (const auto& l : pool) self = self && dissim(*l, *l, 2048, 1).value == 0;
  const bool extremes = dissim(*empty_language(), *complete_language(), 2048, 1).value == 1;

  std::mt19937_64 rng(7);
  int triangle_ok = 0;
  for (int i = 0; i < 100; ++i) {
    const auto& a = pool[rng() % pool.size()];
    const auto& b = pool[rng() % pool.size()];
    const auto& c = pool[rng() % pool.size()];
    const Rational ac = dissim(*a, *c, 2048, 1).value;
    const Rational ab = dissim(*a, *b, 2048, 1).value;
    const Rational bc = dissim(*b, *c, 2048, 1).value;
    triangle_ok += ac <= ab + bc;
  }

  const LanguagePtr cham = chameleon_language(fuel);
  const std::uint64_t horizon = factorial(7);
  bool governed = true;
  std::ostringstream lims;
  for (std::uint64_t j = 0; j < 3; ++j) {
    const DissimEstimate d = dissim(*cham, *machine_language(en.at(j), fuel), horizon, 1);
    const auto lim = superround_liminf(d, factorial(5), j);
    governed = governed && lim && *lim <= Rational(1, 5);
    lims << " L" << j << "=" << (lim ? lim->str() : "none");
  }
  const bool inapprox = dissim(*inapproximable_language(fuel), *cham, horizon, 1).value == 1;

  r.pass = self && extremes && triangle_ok == 100 && governed && inapprox;
  std::ostringstream obs;
  obs << "self=" << self << " extremes=" << extremes << " triangle=" << triangle_ok << "/100 liminf:" << lims.str()
      << " inapprox=" << inapprox;
  r.observed = obs.str();
  return r;
}

inline std::vector<MixedStrategy> registered_nonadaptive(std::uint64_t fuel) {
  SpecContext ctx;
  ctx.fuel = fuel;
  std::vector<MixedStrategy> out;
  for (const auto& s : strategy_set("nonadaptive")) out.push_back(resolve_strategy(s, ctx));
  return out;
}

inline CriterionResult break_even() {
  CriterionResult r{10, "zero-one mixture breaks even", "expected limsup delta density >= 1/2 - 1/2048", "", false};
  const MixedStrategy evader = zero_one_mixture();
  bool ok = true;
  Rational worst = 1;
  std::size_t count = 0;
  for (const auto& p : registered_nonadaptive(1000)) {
    if (!p.pure()) continue;
    ++count;
    const PayoffEstimate e = play_mixed(p, evader, 4096, 2048);
    worst = std::min(worst, e.limsup_est);
    ok = ok && e.limsup_est >= Rational(1, 2) - Rational(1, 2048);
  }
  r.pass = ok && count > 0;
  r.observed = "min over " + std::to_string(count) + " pursuers: " + fmt(worst);
  return r;
}

inline CriterionResult na_bracket() {
  CriterionResult r{11, "empirical NA bracket (soft)", "maxmin, minmax in [0.20, 0.55]", "", false};
  const auto set = registered_nonadaptive(1000);
  const GameMatrix m = empirical_game_matrix(set, set, 4096, 2048);
  const auto inside = [](const Rational& x) { return x >= Rational(1, 5) && x <= Rational(11, 20); };
  r.pass = inside(m.maxmin_est) && inside(m.minmax_est);
  r.observed = "maxmin " + fmt(m.maxmin_est) + ", minmax " + fmt(m.minmax_est);
  return r;
}

}  // namespace acceptance

// Runs the selected criteria (all when `only` is empty); `progress` receives
// one line per criterion as it finishes.
inline std::vector<CriterionResult> acceptance_suite(std::ostream* progress = nullptr, const std::set<int>& only = {}) {
  using namespace acceptance;
  std::vector<CriterionResult> out;
  auto wanted = [&](int id) { return only.empty() || only.contains(id); };
  auto timed = [&](int id, const std::function<CriterionResult()>& f) {
    if (!wanted(id)) return;
    const auto t0 = std::chrono::steady_clock::now();
    CriterionResult r = f();
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (progress)
      *progress << (r.pass ? "PASS" : "FAIL") << " [" << r.id << "] " << r.name << " | expected: " << r.expected
                << " | observed: " << r.observed << " | " << std::fixed << std::setprecision(1) << r.seconds << "s"
                << std::defaultfloat << std::endl;
    out.push_back(std::move(r));
  };
  timed(1, loss_bound_alg2);
  timed(2, alg1_lock_on);
  timed(3, red_herring_universality);
  std::vector<LearnerRun> runs;
  auto ensure_runs = [&] {
    if (runs.empty())
      for (const auto& e : pinned_evaders()) runs.push_back(learner_run(e));
  };
  timed(4, [&] {
    ensure_runs();
    return correct_atom_confinement(runs);
  });
  timed(5, [&] {
    ensure_runs();
    return mixture_bound(runs);
  });
  timed(6, [&] {
    ensure_runs();
    return protocol_oracle(runs);
  });
  timed(7, probabilistic_learner);
  timed(8, zero_sum_identity);
  timed(9, dissimilarity_suite);
  timed(10, break_even);
  timed(11, na_bracket);
  return out;
}

}  // namespace imp
