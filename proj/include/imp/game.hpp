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

// Iterated matching pennies: transcripts, payoff estimation and mixtures.
//
// Round i (1-based) feeds the history word Delta_{i-1} = delta_1..delta_{i-1}
// to both strategies; delta_i = o_eq(i) xor o_ne(i).  Player "=" wins a round
// when delta_i = 0.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "imp/machine.hpp"

namespace imp {

using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.convert_to<double>(); }
inline std::string to_string(const Rational& r) { return r.str(); }

struct Response {
  Bit bit = 0;
  bool exhausted = false;  // an evaluation ran out of fuel; bit is 0
};

// A map from a history word to an output bit.  Implementations must be pure
// functions of the history (any caching must be unobservable).
class Strategy {
 public:
  virtual ~Strategy() = default;
  virtual Response respond(WordView history) const = 0;
  virtual std::string describe() const = 0;
  // True when the output depends on |history| only.
  virtual bool nonadaptive() const { return false; }
};

using StrategyPtr = std::shared_ptr<const Strategy>;

class ConstantStrategy final : public Strategy {
 public:
  explicit ConstantStrategy(Bit bit) : bit_(bit) {}
  Response respond(WordView) const override { return {bit_, false}; }
  std::string describe() const override { return bit_ ? "ones" : "zeros"; }
  bool nonadaptive() const override { return true; }

 private:
  Bit bit_;
};

// Member iff the machine accepts the history within the fuel budget.
class MachineStrategy final : public Strategy {
 public:
  MachineStrategy(Program program, std::uint64_t fuel, std::string label)
      : program_(std::move(program)), fuel_(fuel), label_(std::move(label)) {}

  Response respond(WordView history) const override {
    const RunOutcome out = run(program_, history, fuel_);
    return {static_cast<Bit>(out.accepted()), out.verdict == Verdict::FuelExhausted};
  }
  std::string describe() const override { return label_; }
  const Program& program() const { return program_; }
  std::uint64_t fuel() const { return fuel_; }

 private:
  Program program_;
  std::uint64_t fuel_;
  std::string label_;
};

// Ad-hoc strategies for tests and experiments.
class FunctionStrategy final : public Strategy {
 public:
  using Fn = std::function<Response(WordView)>;
  FunctionStrategy(Fn fn, std::string label, bool nonadaptive = false)
      : fn_(std::move(fn)), label_(std::move(label)), nonadaptive_(nonadaptive) {}
  Response respond(WordView history) const override { return fn_(history); }
  std::string describe() const override { return label_; }
  bool nonadaptive() const override { return nonadaptive_; }

 private:
  Fn fn_;
  std::string label_;
  bool nonadaptive_;
};

inline StrategyPtr constant_strategy(Bit bit) { return std::make_shared<ConstantStrategy>(bit); }

inline StrategyPtr machine_strategy(MachineIndex index, std::uint64_t fuel) {
  return std::make_shared<MachineStrategy>(decode(index), fuel, "lang:" + std::to_string(index));
}

inline StrategyPtr machine_strategy(Program program, std::uint64_t fuel, std::string label) {
  return std::make_shared<MachineStrategy>(std::move(program), fuel, std::move(label));
}

// ---------------------------------------------------------------------------

struct Transcript {
  Word delta;
  Word o_eq;
  Word o_ne;
  std::vector<std::uint8_t> flag_eq;
  std::vector<std::uint8_t> flag_ne;

  std::size_t rounds() const { return delta.size(); }
  std::size_t losses_eq() const { return static_cast<std::size_t>(std::count(delta.begin(), delta.end(), 1)); }
  std::size_t fuel_flags_eq() const { return static_cast<std::size_t>(std::count(flag_eq.begin(), flag_eq.end(), 1)); }
  std::size_t fuel_flags_ne() const { return static_cast<std::size_t>(std::count(flag_ne.begin(), flag_ne.end(), 1)); }
};

inline Transcript play(const Strategy& s_eq, const Strategy& s_ne, std::size_t rounds) {
  if (rounds < 1) throw std::invalid_argument("play: rounds must be >= 1");
  Transcript t;
  t.delta.reserve(rounds);
  t.o_eq.reserve(rounds);
  t.o_ne.reserve(rounds);
  t.flag_eq.reserve(rounds);
  t.flag_ne.reserve(rounds);
  for (std::size_t i = 0; i < rounds; ++i) {
    const WordView history(t.delta.data(), i);
    const Response a = s_eq.respond(history);
    const Response b = s_ne.respond(history);
    t.o_eq.push_back(a.bit);
    t.o_ne.push_back(b.bit);
    t.flag_eq.push_back(a.exhausted);
    t.flag_ne.push_back(b.exhausted);
    t.delta.push_back(static_cast<Bit>(a.bit ^ b.bit));
  }
  return t;
}

struct PayoffEstimate {
  Rational liminf_est;
  Rational limsup_est;
  Rational s_ne;
  Rational s_eq;
  std::size_t tail_start = 1;
  std::size_t horizon = 0;
};

namespace detail {

// Min and max of ones_n / n over n in [tail_start, N], for the running count
// of ones in `bits`.
inline std::pair<Rational, Rational> running_mean_extremes(const Word& bits, std::size_t tail_start) {
  std::uint64_t ones = 0;
  std::uint64_t min_num = 0, min_den = 0, max_num = 0, max_den = 0;
  for (std::size_t n = 1; n <= bits.size(); ++n) {
    ones += bits[n - 1];
    if (n < tail_start) continue;
    if (min_den == 0 || ones * min_den < min_num * n) { min_num = ones; min_den = n; }
    if (max_den == 0 || ones * max_den > max_num * n) { max_num = ones; max_den = n; }
  }
  return {Rational(min_num, min_den), Rational(max_num, max_den)};
}

}  // namespace detail

// Tail-window estimate of the payoff functionals.  s_eq is computed from the
// complementary series independently, so s_eq + s_ne = 1 is a checked fact.
inline PayoffEstimate payoff(const Word& delta, std::size_t tail_start) {
  if (tail_start < 1 || tail_start > delta.size())
    throw std::invalid_argument("payoff: tail_start must lie in [1, rounds]");
  PayoffEstimate p;
  p.tail_start = tail_start;
  p.horizon = delta.size();
  std::tie(p.liminf_est, p.limsup_est) = detail::running_mean_extremes(delta, tail_start);
  p.s_ne = (p.liminf_est + p.limsup_est) / 2;
  Word agree(delta.size());
  for (std::size_t i = 0; i < delta.size(); ++i) agree[i] = static_cast<Bit>(1 - delta[i]);
  auto [lo, hi] = detail::running_mean_extremes(agree, tail_start);
  p.s_eq = (lo + hi) / 2;
  return p;
}

inline PayoffEstimate payoff(const Transcript& t, std::size_t tail_start) { return payoff(t.delta, tail_start); }

inline std::size_t default_tail_start(std::size_t rounds) { return std::max<std::size_t>(1, rounds / 2); }

// ---------------------------------------------------------------------------

struct Atom {
  StrategyPtr strategy;
  Rational probability;
};

// Finite-support distribution over strategies.
class MixedStrategy {
 public:
  MixedStrategy() = default;
  explicit MixedStrategy(std::vector<Atom> atoms, std::string label = "") : atoms_(std::move(atoms)), label_(std::move(label)) {
    if (atoms_.empty()) throw std::invalid_argument("mixed strategy needs at least one atom");
    Rational total = 0;
    for (const auto& a : atoms_) {
      if (!a.strategy) throw std::invalid_argument("mixed strategy atom is null");
      if (a.probability <= 0) throw std::invalid_argument("mixed strategy probabilities must be positive");
      total += a.probability;
    }
    if (total != 1) throw std::invalid_argument("mixed strategy probabilities must sum to 1");
    if (label_.empty()) label_ = atoms_.size() == 1 ? atoms_[0].strategy->describe() : "mixture";
  }

  static MixedStrategy point(StrategyPtr s) {
    auto label = s->describe();
    return MixedStrategy({{std::move(s), Rational(1)}}, std::move(label));
  }

  static MixedStrategy uniform(std::vector<StrategyPtr> strategies, std::string label = "") {
    if (strategies.empty()) throw std::invalid_argument("uniform mixture of nothing");
    std::vector<Atom> atoms;
    const Rational w(1, static_cast<long long>(strategies.size()));
    for (auto& s : strategies) atoms.push_back({std::move(s), w});
    return MixedStrategy(std::move(atoms), std::move(label));
  }

  const std::vector<Atom>& atoms() const { return atoms_; }
  const std::string& label() const { return label_; }
  bool pure() const { return atoms_.size() == 1; }

 private:
  std::vector<Atom> atoms_;
  std::string label_;
};

// Exact expectation over all atom pairs.
inline PayoffEstimate play_mixed(const MixedStrategy& d_eq, const MixedStrategy& d_ne, std::size_t rounds,
                                 std::size_t tail_start) {
  PayoffEstimate e;
  e.tail_start = tail_start;
  e.horizon = rounds;
  for (const auto& a : d_eq.atoms()) {
    for (const auto& b : d_ne.atoms()) {
      const Rational w = a.probability * b.probability;
      const PayoffEstimate p = payoff(play(*a.strategy, *b.strategy, rounds), tail_start);
      e.liminf_est += w * p.liminf_est;
      e.limsup_est += w * p.limsup_est;
      e.s_ne += w * p.s_ne;
      e.s_eq += w * p.s_eq;
    }
  }
  return e;
}

struct GameMatrix {
  std::vector<std::string> row_labels;  // Player "=" strategies
  std::vector<std::string> col_labels;  // Player "!=" strategies
  std::vector<std::vector<PayoffEstimate>> cells;
  // Empirical (finite-set) analogues of minmax and maxmin of s_ne.
  Rational minmax_est;
  Rational maxmin_est;
};

inline GameMatrix empirical_game_matrix(const std::vector<MixedStrategy>& eq_set, const std::vector<MixedStrategy>& ne_set,
                                        std::size_t rounds, std::size_t tail_start) {
  if (eq_set.empty() || ne_set.empty()) throw std::invalid_argument("game matrix needs nonempty strategy sets");
  GameMatrix m;
  for (const auto& s : eq_set) m.row_labels.push_back(s.label());
  for (const auto& s : ne_set) m.col_labels.push_back(s.label());
  m.cells.assign(eq_set.size(), {});
  for (std::size_t r = 0; r < eq_set.size(); ++r)
    for (std::size_t c = 0; c < ne_set.size(); ++c)
      m.cells[r].push_back(play_mixed(eq_set[r], ne_set[c], rounds, tail_start));

  for (std::size_t r = 0; r < eq_set.size(); ++r) {
    Rational row_sup = m.cells[r][0].s_ne;
    for (const auto& cell : m.cells[r]) row_sup = std::max(row_sup, cell.s_ne);
    m.minmax_est = r == 0 ? row_sup : std::min(m.minmax_est, row_sup);
  }
  for (std::size_t c = 0; c < ne_set.size(); ++c) {
    Rational col_inf = m.cells[0][c].s_ne;
    for (std::size_t r = 0; r < eq_set.size(); ++r) col_inf = std::min(col_inf, m.cells[r][c].s_ne);
    m.maxmin_est = c == 0 ? col_inf : std::max(m.maxmin_est, col_inf);
  }
  return m;
}

// ---------------------------------------------------------------------------

// One line per round: "round o_eq o_ne delta flag_eq flag_ne", tab separated.
inline void write_transcript_tsv(std::ostream& os, const Transcript& t) {
  for (std::size_t i = 0; i < t.rounds(); ++i) {
    os << (i + 1) << '\t' << int(t.o_eq[i]) << '\t' << int(t.o_ne[i]) << '\t' << int(t.delta[i]) << '\t'
       << int(t.flag_eq[i]) << '\t' << int(t.flag_ne[i]) << '\n';
  }
}

inline std::string transcript_tsv(const Transcript& t) {
  std::ostringstream os;
  write_transcript_tsv(os, t);
  return os.str();
}

// 64-bit FNV-1a.
inline std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[i] = digits[v & 0xF];
  return s;
}

inline std::string transcript_digest(const Transcript& t) { return hex64(fnv1a(transcript_tsv(t))); }

}  // namespace imp
