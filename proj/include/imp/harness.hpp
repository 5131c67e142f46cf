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

// Experiment plumbing: configurations, strategy and language spec strings,
// and the drivers behind each CLI subcommand.  Records are JSON objects, one
// per line; every record carries the hash of the configuration it came from.
//
// Strategy specs:
//   zeros | ones | alg1 | alg1-evader | alg2 | lang:<index|NAME>
//   na:<lang> | co-na:<lang> | alg3:j=J,k=K | alg3-mix:k=K | prob[:seed=S]
//   red-herring:<spec> | chameleon | inapprox | zero-one
// Language specs (dissim, na, co-na):
//   empty | complete | <index> | NAME | co:<lang> | chameleon | inapprox

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "imp/adversarial.hpp"
#include "imp/approx.hpp"
#include "imp/game.hpp"
#include "imp/learner.hpp"
#include "imp/library.hpp"

namespace imp {

using Json = nlohmann::json;

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::uint64_t kDefaultFuel = 10000;
inline constexpr std::uint64_t kLearnerFuel = 1000;

// IMP_FUEL overrides the built-in default.
inline std::uint64_t default_fuel() {
  if (const char* env = std::getenv("IMP_FUEL")) {
    try {
      std::size_t used = 0;
      const unsigned long long v = std::stoull(env, &used);
      if (used == std::string_view(env).size() && v > 0) return v;
    } catch (const std::exception&) {
    }
    throw UsageError("IMP_FUEL must be a positive integer, got '" + std::string(env) + "'");
  }
  return kDefaultFuel;
}

struct ExperimentConfig {
  std::string subcommand = "play";
  std::string eq;
  std::string ne;
  std::string eq_set;
  std::string ne_set;
  std::string l1;
  std::string l2;
  std::uint64_t rounds = 200;
  std::uint64_t fuel = kDefaultFuel;
  std::optional<std::uint64_t> tail_start;
  std::optional<std::uint64_t> seed;
  std::string enumeration = "library";
  std::string output;
  std::string csv;

  std::uint64_t effective_tail() const { return tail_start ? *tail_start : default_tail_start(rounds); }

  Json to_json() const {
    Json j;
    j["subcommand"] = subcommand;
    j["eq"] = eq;
    j["ne"] = ne;
    j["eq_set"] = eq_set;
    j["ne_set"] = ne_set;
    j["l1"] = l1;
    j["l2"] = l2;
    j["rounds"] = rounds;
    j["fuel"] = fuel;
    j["tail_start"] = tail_start ? Json(*tail_start) : Json(nullptr);
    j["seed"] = seed ? Json(*seed) : Json(nullptr);
    j["enumeration"] = enumeration;
    j["output"] = output;
    j["csv"] = csv;
    return j;
  }

  static ExperimentConfig from_json(const Json& j) {
    ExperimentConfig c;
    c.subcommand = j.at("subcommand").get<std::string>();
    c.eq = j.value("eq", "");
    c.ne = j.value("ne", "");
    c.eq_set = j.value("eq_set", "");
    c.ne_set = j.value("ne_set", "");
    c.l1 = j.value("l1", "");
    c.l2 = j.value("l2", "");
    c.rounds = j.at("rounds").get<std::uint64_t>();
    c.fuel = j.at("fuel").get<std::uint64_t>();
    if (j.contains("tail_start") && !j["tail_start"].is_null()) c.tail_start = j["tail_start"].get<std::uint64_t>();
    if (j.contains("seed") && !j["seed"].is_null()) c.seed = j["seed"].get<std::uint64_t>();
    c.enumeration = j.value("enumeration", "library");
    c.output = j.value("output", "");
    c.csv = j.value("csv", "");
    return c;
  }

  std::string hash() const { return hex64(fnv1a(to_json().dump())); }

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

// ---------------------------------------------------------------------------
// Spec strings

struct SpecContext {
  std::uint64_t fuel = kDefaultFuel;
  std::optional<std::uint64_t> seed;
  MachineEnumeration enumeration{EnumerationKind::LibraryFirst};
};

namespace detail {

inline std::optional<std::uint64_t> parse_u64(std::string_view s) {
  if (s.empty() || s.size() > 19) return std::nullopt;
  std::uint64_t v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + static_cast<std::uint64_t>(c - '0');
  }
  return v;
}

// "j=3,k=1" -> lookups; unknown keys are an error.
inline std::map<std::string, std::uint64_t> parse_params(std::string_view s, std::initializer_list<std::string_view> keys,
                                                        std::string_view spec) {
  std::map<std::string, std::uint64_t> out;
  while (!s.empty()) {
    const auto comma = s.find(',');
    const std::string_view item = s.substr(0, comma);
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw UsageError("malformed parameter '" + std::string(item) + "' in " + std::string(spec));
    const std::string key(item.substr(0, eq));
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      throw UsageError("unknown parameter '" + key + "' in " + std::string(spec));
    auto v = parse_u64(item.substr(eq + 1));
    if (!v) throw UsageError("parameter '" + key + "' must be a nonnegative integer in " + std::string(spec));
    out[key] = *v;
    if (comma == std::string_view::npos) break;
    s.remove_prefix(comma + 1);
  }
  return out;
}

inline bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

}  // namespace detail

inline std::vector<std::string> registered_strategy_specs() {
  return {"zeros", "ones", "alg1", "alg1-evader", "alg2", "lang:<index|NAME>", "na:<lang>", "co-na:<lang>",
          "alg3:j=J,k=K", "alg3-mix:k=K", "prob[:seed=S]", "red-herring:<spec>", "chameleon", "inapprox", "zero-one"};
}

inline std::string usage_list() {
  std::string s = "registered strategy specs:";
  for (const auto& x : registered_strategy_specs()) s += " " + x;
  return s;
}

inline LanguagePtr resolve_language(std::string_view spec, const SpecContext& ctx) {
  if (spec == "empty") return empty_language();
  if (spec == "complete") return complete_language();
  if (spec == "chameleon") return chameleon_language(ctx.fuel, ctx.enumeration);
  if (spec == "inapprox") return inapproximable_language(ctx.fuel, ctx.enumeration);
  if (detail::starts_with(spec, "co:")) return complement(resolve_language(spec.substr(3), ctx));
  if (auto idx = detail::parse_u64(spec)) return machine_language(*idx, ctx.fuel);
  if (auto* m = find_machine(spec)) return machine_language(m->program, ctx.fuel, m->name);
  throw UsageError("unknown language spec '" + std::string(spec) +
                   "' (expected empty|complete|<index>|NAME|co:<lang>|chameleon|inapprox)");
}

inline MixedStrategy resolve_strategy(std::string_view spec, const SpecContext& ctx) {
  using detail::starts_with;
  auto pure = [](StrategyPtr s) { return MixedStrategy::point(std::move(s)); };
  if (spec == "zeros") return pure(constant_strategy(0));
  if (spec == "ones") return pure(constant_strategy(1));
  if (spec == "zero-one") return zero_one_mixture();
  if (spec == "alg1") return pure(alg1_strategy(Alg1Config::from_names(default_alg1_names(), ctx.fuel)));
  if (spec == "alg1-evader") return pure(alg1_evader_strategy(Alg1Config::from_names(default_alg1_names(), ctx.fuel)));
  if (spec == "alg2") return pure(alg2_strategy(ctx.fuel));
  if (spec == "chameleon") return pure(na_wrap(chameleon_language(ctx.fuel, ctx.enumeration)));
  if (spec == "inapprox") return pure(na_wrap(inapproximable_language(ctx.fuel, ctx.enumeration)));
  if (starts_with(spec, "lang:")) {
    const auto rest = spec.substr(5);
    if (auto idx = detail::parse_u64(rest)) return pure(machine_strategy(*idx, ctx.fuel));
    const auto& m = named(rest);
    return pure(machine_strategy(m.program, ctx.fuel, "lang:" + m.name));
  }
  if (starts_with(spec, "na:")) return pure(na_wrap(resolve_language(spec.substr(3), ctx)));
  if (starts_with(spec, "co-na:")) return pure(na_wrap(complement(resolve_language(spec.substr(6), ctx))));
  if (starts_with(spec, "alg3:")) {
    auto p = detail::parse_params(spec.substr(5), {"j", "k"}, spec);
    const std::uint64_t k = p.contains("k") ? p["k"] : 1;
    const std::uint64_t j = p.contains("j") ? p["j"] : 0;
    if (k < 1 || k >= 32 || j >= (std::uint64_t{1} << (2 * k))) throw UsageError("alg3 needs k >= 1 and 0 <= j < 4^k");
    return pure(alg3_pure_strategy(j, k, ctx.fuel, ctx.enumeration));
  }
  if (starts_with(spec, "alg3-mix:")) {
    auto p = detail::parse_params(spec.substr(9), {"k"}, spec);
    const std::uint64_t k = p.contains("k") ? p["k"] : 1;
    if (k < 1 || k > 8) throw UsageError("alg3-mix needs 1 <= k <= 8");
    return alg3_mixture(k, ctx.fuel, ctx.enumeration);
  }
  if (spec == "prob" || starts_with(spec, "prob:")) {
    std::optional<std::uint64_t> seed = ctx.seed;
    if (spec.size() > 5) {
      auto p = detail::parse_params(spec.substr(5), {"seed"}, spec);
      if (p.contains("seed")) seed = p["seed"];
    }
    if (!seed) throw UsageError("the probabilistic learner needs --seed");
    return pure(prob_learner_strategy(*seed, ctx.fuel, ctx.enumeration));
  }
  if (starts_with(spec, "red-herring:")) {
    MixedStrategy target = resolve_strategy(spec.substr(12), ctx);
    if (!target.pure()) throw UsageError("red-herring needs a pure target strategy");
    return pure(red_herring(target.atoms()[0].strategy));
  }
  throw UsageError("unknown strategy spec '" + std::string(spec) + "'; " + usage_list());
}

inline std::vector<std::string> strategy_set(std::string_view name) {
  if (name == "basic")
    return {"zeros", "ones", "alg2", "alg1", "lang:PARITY", "na:PARITY", "co-na:PARITY", "alg3:j=3,k=1"};
  if (name == "nonadaptive")
    return {"zeros",       "ones",           "na:PARITY", "co-na:PARITY", "na:LAST_BIT", "na:EVEN_LENGTH",
            "na:FIRST_BIT", "na:HAS_ONE",    "chameleon", "inapprox",     "zero-one"};
  throw UsageError("unknown strategy set '" + std::string(name) + "' (expected basic|nonadaptive)");
}

inline SpecContext context_of(const ExperimentConfig& c) {
  return {c.fuel, c.seed, MachineEnumeration::parse(c.enumeration)};
}

// ---------------------------------------------------------------------------
// Records

inline Json payoff_json(const PayoffEstimate& p) {
  return {{"liminf", to_string(p.liminf_est)}, {"limsup", to_string(p.limsup_est)}, {"s_ne", to_string(p.s_ne)},
          {"s_eq", to_string(p.s_eq)},         {"s_ne_approx", to_double(p.s_ne)},  {"tail_start", p.tail_start},
          {"horizon", p.horizon}};
}

struct PlayOutcome {
  PayoffEstimate payoff;
  std::string digest;
  Rational expected_losses;
  std::uint64_t fuel_flags_eq = 0;
  std::uint64_t fuel_flags_ne = 0;
  std::vector<Transcript> transcripts;  // one per atom pair, row-major
};

// Exact expectation like play_mixed, keeping the transcripts.
inline PlayOutcome play_outcome(const MixedStrategy& eq, const MixedStrategy& ne, std::size_t rounds,
                                std::size_t tail_start) {
  PlayOutcome out;
  out.payoff.tail_start = tail_start;
  out.payoff.horizon = rounds;
  std::string all;
  for (const auto& a : eq.atoms()) {
    for (const auto& b : ne.atoms()) {
      Transcript t = play(*a.strategy, *b.strategy, rounds);
      const Rational w = a.probability * b.probability;
      const PayoffEstimate p = payoff(t, tail_start);
      out.payoff.liminf_est += w * p.liminf_est;
      out.payoff.limsup_est += w * p.limsup_est;
      out.payoff.s_ne += w * p.s_ne;
      out.payoff.s_eq += w * p.s_eq;
      out.expected_losses += w * Rational(static_cast<long long>(t.losses_eq()));
      out.fuel_flags_eq += t.fuel_flags_eq();
      out.fuel_flags_ne += t.fuel_flags_ne();
      all += transcript_tsv(t);
      out.transcripts.push_back(std::move(t));
    }
  }
  out.digest = hex64(fnv1a(all));
  return out;
}

inline Json base_record(const ExperimentConfig& c, std::string_view kind) {
  return {{"kind", kind}, {"config_hash", c.hash()}, {"config", c.to_json()}};
}

using RecordSink = std::function<void(const Json&)>;

inline void run_play(const ExperimentConfig& c, const RecordSink& emit, std::ostream* csv) {
  const SpecContext ctx = context_of(c);
  const MixedStrategy eq = resolve_strategy(c.eq, ctx);
  const MixedStrategy ne = resolve_strategy(c.ne, ctx);
  const PlayOutcome out = play_outcome(eq, ne, c.rounds, c.effective_tail());
  Json r = base_record(c, "play");
  r["eq"] = eq.label();
  r["ne"] = ne.label();
  r["digest"] = out.digest;
  r["payoff"] = payoff_json(out.payoff);
  r["expected_losses_eq"] = to_string(out.expected_losses);
  r["fuel_flags_eq"] = out.fuel_flags_eq;
  r["fuel_flags_ne"] = out.fuel_flags_ne;
  if (out.transcripts.size() == 1) r["losses_eq"] = out.transcripts[0].losses_eq();
  emit(r);
  if (csv && out.transcripts.size() == 1) {
    const Transcript& t = out.transcripts[0];
    *csv << "round,o_eq,o_ne,delta,running_mean\n";
    std::size_t ones = 0;
    for (std::size_t i = 0; i < t.delta.size(); ++i) {
      ones += t.delta[i];
      *csv << i + 1 << ',' << int(t.o_eq[i]) << ',' << int(t.o_ne[i]) << ',' << int(t.delta[i]) << ','
           << static_cast<double>(ones) / static_cast<double>(i + 1) << '\n';
    }
  }
}

inline std::vector<MixedStrategy> resolve_set(const std::string& set_or_list, const SpecContext& ctx) {
  std::vector<std::string> specs;
  if (set_or_list == "basic" || set_or_list == "nonadaptive") {
    specs = strategy_set(set_or_list);
  } else {
    std::stringstream ss(set_or_list);
    for (std::string item; std::getline(ss, item, ';');)
      if (!item.empty()) specs.push_back(item);
  }
  if (specs.empty()) throw UsageError("empty strategy set");
  std::vector<MixedStrategy> out;
  for (const auto& s : specs) out.push_back(resolve_strategy(s, ctx));
  return out;
}

inline GameMatrix run_matrix(const ExperimentConfig& c, const RecordSink& emit, std::ostream* csv) {
  const SpecContext ctx = context_of(c);
  const GameMatrix m =
      empirical_game_matrix(resolve_set(c.eq_set, ctx), resolve_set(c.ne_set, ctx), c.rounds, c.effective_tail());
  for (std::size_t r = 0; r < m.cells.size(); ++r) {
    for (std::size_t col = 0; col < m.cells[r].size(); ++col) {
      Json rec = base_record(c, "matrix-cell");
      rec["row"] = r;
      rec["col"] = col;
      rec["eq"] = m.row_labels[r];
      rec["ne"] = m.col_labels[col];
      rec["payoff"] = payoff_json(m.cells[r][col]);
      emit(rec);
    }
  }
  Json summary = base_record(c, "matrix");
  summary["rows"] = m.row_labels;
  summary["cols"] = m.col_labels;
  summary["minmax_est"] = to_string(m.minmax_est);
  summary["maxmin_est"] = to_string(m.maxmin_est);
  summary["minmax_approx"] = to_double(m.minmax_est);
  summary["maxmin_approx"] = to_double(m.maxmin_est);
  emit(summary);
  if (csv) {
    *csv << "eq\\ne";
    for (const auto& l : m.col_labels) *csv << ',' << l;
    *csv << '\n';
    for (std::size_t r = 0; r < m.cells.size(); ++r) {
      *csv << m.row_labels[r];
      for (const auto& cell : m.cells[r]) *csv << ',' << to_double(cell.s_ne);
      *csv << '\n';
    }
  }
  return m;
}

inline void run_dissim(const ExperimentConfig& c, const RecordSink& emit, std::ostream* csv) {
  const SpecContext ctx = context_of(c);
  const LanguagePtr a = resolve_language(c.l1, ctx);
  const LanguagePtr b = resolve_language(c.l2, ctx);
  const DissimEstimate d = dissim(*a, *b, c.rounds, c.effective_tail());
  Json r = base_record(c, "dissim");
  r["l1"] = a->describe();
  r["l2"] = b->describe();
  r["value"] = to_string(d.value);
  r["value_approx"] = to_double(d.value);
  if (auto lim = superround_liminf(d, 1)) r["superround_liminf"] = to_string(*lim);
  emit(r);
  if (csv) write_dissim_csv(*csv, d);
}

// The machine behind a na:/co-na: evader spec, when there is one.
inline std::optional<MachineIndex> evader_machine(std::string_view spec) {
  std::string_view rest;
  if (detail::starts_with(spec, "co-na:")) rest = spec.substr(6);
  else if (detail::starts_with(spec, "na:")) rest = spec.substr(3);
  else return std::nullopt;
  if (auto idx = detail::parse_u64(rest)) return *idx;
  if (auto* m = find_machine(rest)) return m->index;
  return std::nullopt;
}

// Target-machine hypotheses that became the active hypothesis.
inline std::uint64_t revisits(const LearnerState& state, const LearnerConfig& cfg, MachineIndex target) {
  std::uint64_t n = 0;
  for (const auto& [h, pos] : state.activations())
    if (cfg.machine_of(h) == target) ++n;
  return n;
}

inline std::shared_ptr<const UniversalLearner> as_learner(const MixedStrategy& s) {
  if (!s.pure()) return nullptr;
  return std::dynamic_pointer_cast<const UniversalLearner>(s.atoms()[0].strategy);
}

// Per-round annotated trace of a learner against a pure opponent.
inline void run_alg3_trace(const ExperimentConfig& c, const RecordSink& emit) {
  const SpecContext ctx = context_of(c);
  const auto learner = as_learner(resolve_strategy(c.eq.empty() ? "alg3:j=0,k=1" : c.eq, ctx));
  if (!learner) throw UsageError("alg3-trace needs a learner (alg3:... or prob) as --eq");
  const MixedStrategy ne = resolve_strategy(c.ne, ctx);
  if (!ne.pure()) throw UsageError("alg3-trace needs a pure --ne strategy");
  const Strategy& opponent = *ne.atoms()[0].strategy;
  Word delta;
  for (std::uint64_t i = 0; i < c.rounds; ++i) {
    const LearnerEvaluation ev = learner->evaluate(delta);
    const Response o = opponent.respond(delta);
    const Bit d = static_cast<Bit>(ev.response.bit ^ o.bit);
    Json r = {{"kind", "trace"}, {"config_hash", c.hash()}, {"round", i + 1}, {"position", i}, {"active", ev.active}};
    r["owner"] = ev.info.owner ? Json(*ev.info.owner) : Json(nullptr);
    r["role"] = ev.info.owner && *ev.info.owner != ev.active ? "preallocated" : to_string(ev.info.role);
    r["slot_role"] = to_string(ev.info.role);
    if (ev.info.owner && ev.info.role != PositionRole::Random) {
      r["block"] = ev.info.block;
      r["e"] = ev.info.e;
    }
    r["output"] = ev.response.bit;
    r["fuel_flag"] = ev.response.exhausted;
    r["opponent"] = o.bit;
    r["delta"] = d;
    delta.push_back(d);
    const bool closes_block = ev.info.owner && ev.info.e == 0 &&
                              (ev.info.role == PositionRole::Encode || ev.info.role == PositionRole::Bootstrap);
    if (closes_block) {
      for (const auto& blk : learner->decode_chain(delta, *ev.info.owner)) {
        if (blk.block == ev.info.block + 1) {
          r["decoded_block"] = blk.block;
          r["decoded_count"] = blk.count;
          r["decoded_terminated"] = blk.terminated;
        }
      }
    }
    emit(r);
  }
  const LearnerState st = learner->state_after(delta);
  Json s = base_record(c, "trace-summary");
  s["losses_eq"] = std::count(delta.begin(), delta.end(), Bit{1});
  s["active"] = st.active();
  s["dead"] = st.dead_list();
  Json acts = Json::array();
  for (const auto& [h, pos] : st.activations()) acts.push_back({{"h", h}, {"position", pos}});
  s["activations"] = acts;
  if (auto m = evader_machine(c.ne)) s["revisits"] = revisits(st, learner->config(), *m);
  emit(s);
}

// All 4^k atoms against one evader; shows which atoms lock on.
inline void run_learn_demo(const ExperimentConfig& c, const RecordSink& emit) {
  const SpecContext ctx = context_of(c);
  const std::string eq = c.eq.empty() ? "alg3-mix:k=1" : c.eq;
  const MixedStrategy mix = resolve_strategy(eq, ctx);
  const MixedStrategy ne = resolve_strategy(c.ne.empty() ? "co-na:PARITY" : c.ne, ctx);
  const std::size_t tail = c.effective_tail();
  Rational expected_seq;
  for (std::size_t a = 0; a < mix.atoms().size(); ++a) {
    const auto& atom = mix.atoms()[a];
    const PlayOutcome out = play_outcome(MixedStrategy::point(atom.strategy), ne, c.rounds, tail);
    expected_seq += atom.probability * out.payoff.s_eq;
    Json r = base_record(c, "learn-atom");
    r["atom"] = a;
    r["eq"] = atom.strategy->describe();
    r["ne"] = ne.label();
    r["payoff"] = payoff_json(out.payoff);
    r["expected_losses_eq"] = to_string(out.expected_losses);
    r["digest"] = out.digest;
    if (auto learner = std::dynamic_pointer_cast<const UniversalLearner>(atom.strategy)) {
      const LearnerState st = learner->state_after(out.transcripts[0].delta);
      r["active"] = st.active();
      r["dead"] = st.dead_list();
    }
    emit(r);
  }
  Json s = base_record(c, "learn-demo");
  s["eq"] = mix.label();
  s["ne"] = ne.label();
  s["expected_s_eq"] = to_string(expected_seq);
  s["expected_s_eq_approx"] = to_double(expected_seq);
  emit(s);
}

inline void validate(const ExperimentConfig& c) {
  if (c.rounds == 0) throw UsageError("rounds must be positive");
  if (c.fuel == 0) throw UsageError("fuel must be positive");
  if (c.tail_start && (*c.tail_start < 1 || *c.tail_start > c.rounds))
    throw UsageError("tail_start must lie in [1, rounds]");
  MachineEnumeration::parse(c.enumeration);
  const auto mentions_prob = [](const std::string& s) { return s.find("prob") != std::string::npos; };
  if ((mentions_prob(c.eq) || mentions_prob(c.ne)) && !c.seed &&
      c.eq.find("seed=") == std::string::npos && c.ne.find("seed=") == std::string::npos)
    throw UsageError("--seed is mandatory for probabilistic runs");
}

// Dispatches one configuration.  Records go to `records`; trajectories to `csv`.
inline void run(const ExperimentConfig& c, std::ostream& records, std::ostream* csv = nullptr) {
  validate(c);
  const RecordSink emit = [&](const Json& j) { records << j.dump() << '\n'; };
  if (c.subcommand == "play") {
    if (c.eq.empty() || c.ne.empty()) throw UsageError("play needs --eq and --ne");
    run_play(c, emit, csv);
  } else if (c.subcommand == "matrix") {
    if (c.eq_set.empty() || c.ne_set.empty()) throw UsageError("matrix needs --eq-set and --ne-set");
    run_matrix(c, emit, csv);
  } else if (c.subcommand == "dissim") {
    if (c.l1.empty() || c.l2.empty()) throw UsageError("dissim needs --l1 and --l2");
    run_dissim(c, emit, csv);
  } else if (c.subcommand == "alg3-trace") {
    if (c.ne.empty()) throw UsageError("alg3-trace needs --ne");
    run_alg3_trace(c, emit);
  } else if (c.subcommand == "learn-demo") {
    run_learn_demo(c, emit);
  } else {
    throw UsageError("unknown subcommand '" + c.subcommand + "' (expected play|matrix|dissim|alg3-trace|learn-demo)");
  }
}

}  // namespace imp
