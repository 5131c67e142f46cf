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

// Languages as membership oracles over word ranks, the NA transform, the
// dissimilarity pseudometric, and the chameleon language built from
// factorial super-rounds.

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "imp/arith.hpp"
#include "imp/game.hpp"
#include "imp/library.hpp"
#include "imp/machine.hpp"
#include "imp/words.hpp"

namespace imp {

class Language {
 public:
  virtual ~Language() = default;
  // Membership of the word of the given shortlex rank.
  virtual bool contains(std::uint64_t rank) const = 0;
  virtual std::string describe() const = 0;
};

using LanguagePtr = std::shared_ptr<const Language>;

namespace detail {

class ConstantLanguage final : public Language {
 public:
  explicit ConstantLanguage(bool member) : member_(member) {}
  bool contains(std::uint64_t) const override { return member_; }
  std::string describe() const override { return member_ ? "complete" : "empty"; }

 private:
  bool member_;
};

class MachineLanguage final : public Language {
 public:
  MachineLanguage(Program program, std::uint64_t fuel, std::string label)
      : program_(std::move(program)), fuel_(fuel), label_(std::move(label)) {}
  bool contains(std::uint64_t rank) const override { return accepts(program_, word_at(rank), fuel_); }
  std::string describe() const override { return label_; }

 private:
  Program program_;
  std::uint64_t fuel_;
  std::string label_;
};

class ComplementLanguage final : public Language {
 public:
  explicit ComplementLanguage(LanguagePtr inner) : inner_(std::move(inner)) {}
  bool contains(std::uint64_t rank) const override { return !inner_->contains(rank); }
  std::string describe() const override { return "co-" + inner_->describe(); }

 private:
  LanguagePtr inner_;
};

class ChameleonLanguage final : public Language {
 public:
  ChameleonLanguage(std::uint64_t fuel, MachineEnumeration enumeration) : fuel_(fuel), enumeration_(enumeration) {}

  bool contains(std::uint64_t rank) const override {
    const Program p = decode(enumeration_.at(governing_index(rank)));
    return accepts(p, word_at(rank), fuel_);
  }
  std::string describe() const override { return "chameleon"; }

  static std::uint64_t governing_index(std::uint64_t rank) { return rank == 0 ? 0 : triangle(caf(rank)); }

 private:
  std::uint64_t fuel_;
  MachineEnumeration enumeration_;
};

class NaStrategy final : public Strategy {
 public:
  explicit NaStrategy(LanguagePtr lang) : lang_(std::move(lang)) {}
  Response respond(WordView history) const override { return {static_cast<Bit>(lang_->contains(history.size())), false}; }
  std::string describe() const override { return "na(" + lang_->describe() + ")"; }
  bool nonadaptive() const override { return true; }

 private:
  LanguagePtr lang_;
};

}  // namespace detail

inline LanguagePtr empty_language() { return std::make_shared<detail::ConstantLanguage>(false); }
inline LanguagePtr complete_language() { return std::make_shared<detail::ConstantLanguage>(true); }

inline LanguagePtr machine_language(Program program, std::uint64_t fuel, std::string label) {
  return std::make_shared<detail::MachineLanguage>(std::move(program), fuel, std::move(label));
}

inline LanguagePtr machine_language(MachineIndex index, std::uint64_t fuel) {
  return machine_language(decode(index), fuel, "T" + std::to_string(index));
}

inline LanguagePtr named_language(std::string_view name, std::uint64_t fuel) {
  const auto& m = named(name);
  return machine_language(m.program, fuel, m.name);
}

inline LanguagePtr complement(LanguagePtr lang) { return std::make_shared<detail::ComplementLanguage>(std::move(lang)); }

// w_i is a member iff T_g accepts it, g = triangle(caf(i)); rank 0 uses g = 0.
inline LanguagePtr chameleon_language(std::uint64_t fuel,
                                      MachineEnumeration enumeration = MachineEnumeration(EnumerationKind::LibraryFirst)) {
  return std::make_shared<detail::ChameleonLanguage>(fuel, enumeration);
}

inline std::uint64_t chameleon_governing_index(std::uint64_t rank) {
  return detail::ChameleonLanguage::governing_index(rank);
}

inline LanguagePtr inapproximable_language(
    std::uint64_t fuel, MachineEnumeration enumeration = MachineEnumeration(EnumerationKind::LibraryFirst)) {
  return complement(chameleon_language(fuel, enumeration));
}

// Round i's bit is membership of w_{i-1}.
inline StrategyPtr na_wrap(LanguagePtr lang) {
  if (!lang) throw std::invalid_argument("na_wrap: null language");
  return std::make_shared<detail::NaStrategy>(std::move(lang));
}

// ---------------------------------------------------------------------------

struct DissimEstimate {
  Rational value;
  std::uint64_t horizon = 0;
  std::uint64_t tail_start = 0;
  // Cumulative symmetric-difference counts; entry n-1 covers w_0..w_{n-1}.
  std::vector<std::uint64_t> differences;
};

inline DissimEstimate dissim(const Language& a, const Language& b, std::uint64_t horizon, std::uint64_t tail_start) {
  if (tail_start < 1 || tail_start > horizon) throw std::invalid_argument("dissim: need 1 <= tail_start <= horizon");
  DissimEstimate d;
  d.horizon = horizon;
  d.tail_start = tail_start;
  d.differences.reserve(horizon);
  std::uint64_t diff = 0;
  for (std::uint64_t i = 0; i < horizon; ++i) {
    if (a.contains(i) != b.contains(i)) ++diff;
    d.differences.push_back(diff);
    const std::uint64_t n = i + 1;
    if (n >= tail_start) {
      const Rational density(static_cast<long long>(diff), static_cast<long long>(n));
      if (n == tail_start || density > d.value) d.value = density;
    }
  }
  return d;
}

// rank,cumulative_density
inline void write_dissim_csv(std::ostream& os, const DissimEstimate& d) {
  os << "rank,cumulative_density\n";
  for (std::size_t i = 0; i < d.differences.size(); ++i)
    os << i << ',' << to_double(Rational(static_cast<long long>(d.differences[i]), static_cast<long long>(i + 1))) << '\n';
}

// Minimum of the running difference density over super-round ends (y+1)!
// lying in [from, horizon], restricted to super-rounds governed by g when
// given.
inline std::optional<Rational> superround_liminf(const DissimEstimate& d, std::uint64_t from,
                                                 std::optional<std::uint64_t> governed_by = std::nullopt) {
  std::optional<Rational> best;
  for (std::uint64_t y = 1;; ++y) {
    const std::uint64_t end = factorial(y + 1);
    if (end > d.horizon) break;
    if (end < from) continue;
    if (governed_by && triangle(y) != *governed_by) continue;
    const Rational density(static_cast<long long>(d.differences[end - 1]), static_cast<long long>(end));
    if (!best || density < *best) best = density;
  }
  return best;
}

// Break-even evader: all zeros or all ones with probability 1/2 each.
inline MixedStrategy zero_one_mixture() {
  return MixedStrategy({{constant_strategy(0), Rational(1, 2)}, {constant_strategy(1), Rational(1, 2)}}, "zero-one");
}

}  // namespace imp
