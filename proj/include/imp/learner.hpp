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

// The universal learner for co-R.E. nonadaptive evaders.
//
// Positions.  Position p is the round whose history has length p; its
// outcome is delta_{p+1} = history[p], and a nonadaptive evader's bit there is
// membership of the shortlex word w_p.
//
// Hypotheses.  Hypothesis h claims evader bit 0 at p iff machine T_M accepts
// w_p.  For the 4^k-atom mixture M = h div k and try = h mod k; the
// probabilistic learner walks M = triangle(h).
//
// Slots.  Slot a covers positions [a^2, a^2 + width) and belongs to
// hypothesis triangle(a).  A slot overlapping an earlier claimed slot is
// skipped (only a = 1 for widths 2 and 4).  A hypothesis' first slot starts
// its chain; later slots stay reserved for it while it is alive.
//
// Chains.  A chain is a sequence of blocks B_0, B_1, ...  B_0 holds the
// two guessed bits, |B_t| = 2^(t+1) - 1 for t >= 1, and the last m_t = t + 2
// positions of B_t carry a binary search for the number of accepted words
// in B_{t+1}, most significant bit first.  Earlier positions of B_t are
// predicted from the decoded membership of B_t and are the rounds the learner
// expects to win; a loss there kills the hypothesis.  B_{t+2} is laid out when
// the first encoding position of B_t is reached; it takes the hypothesis' own
// reserved positions and, while the hypothesis is the active one (the least
// live hypothesis), every position not reserved for a live hypothesis.
//
// Evaluation is two passes over the history.  Pass one replays the chain
// bookkeeping from the delta values alone.  Pass two walks the chain of the
// hypothesis owning the current position, recovering its own past outputs as
// prediction xor delta and re-running the decoding dovetails.

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "imp/arith.hpp"
#include "imp/dovetail.hpp"
#include "imp/game.hpp"
#include "imp/library.hpp"
#include "imp/machine.hpp"
#include "imp/words.hpp"

namespace imp {

using Position = std::uint64_t;

// ---------------------------------------------------------------------------
// Slot layout

class SlotLayout {
 public:
  explicit SlotLayout(unsigned width) : width_(width) {
    if (width < 1 || width > 5) throw std::invalid_argument("slot width must be in [1, 5]");
    // For a >= 3, (a-1)^2 + width <= a^2, so only small slots can collide.
    Position end = 0;
    for (std::uint64_t a = 0; a < kSmall; ++a) {
      claimed_[a] = a == 0 || a * a >= end;
      if (claimed_[a]) end = a * a + width_;
    }
  }

  unsigned width() const { return width_; }

  bool claimed(std::uint64_t a) const { return a < kSmall ? claimed_[a] : true; }

  // Slot containing p and p's offset within it.
  std::optional<std::pair<std::uint64_t, unsigned>> slot_of(Position p) const {
    for (std::uint64_t a = isqrt(p);; --a) {
      if (a * a + width_ <= p) return std::nullopt;
      if (claimed(a) && p >= a * a) return std::make_pair(a, static_cast<unsigned>(p - a * a));
      if (a == 0) return std::nullopt;
    }
  }

  std::optional<std::uint64_t> owner(Position p) const {
    if (auto s = slot_of(p)) return triangle(s->first);
    return std::nullopt;
  }

  // Claimed slots of hypothesis h in ascending order: a = b(b+1)/2 + h, b >= h.
  template <typename Visit>
  void for_each_slot(std::uint64_t h, std::uint64_t first_b, Visit&& visit) const {
    for (std::uint64_t b = std::max(first_b, h);; ++b) {
      const std::uint64_t a = b * (b + 1) / 2 + h;
      if (!claimed(a)) continue;
      if (!visit(a, b)) return;
    }
  }

 private:
  static constexpr std::uint64_t kSmall = 8;
  unsigned width_;
  std::array<bool, kSmall> claimed_{};
};

// Reserved positions of hypothesis h not exceeding limit.
inline std::vector<Position> preallocated_positions(std::uint64_t h, Position limit, unsigned width = 2) {
  SlotLayout layout(width);
  std::vector<Position> out;
  layout.for_each_slot(h, 0, [&](std::uint64_t a, std::uint64_t) {
    if (a * a > limit) return false;
    for (unsigned o = 0; o < width; ++o)
      if (a * a + o <= limit) out.push_back(a * a + o);
    return true;
  });
  return out;
}

// For each block t of a chain: encoding width m_t and block size.
inline std::uint64_t encoding_width(std::uint64_t t) { return MSequence::at(t); }
inline std::uint64_t block_size(std::uint64_t t) { return t == 0 ? 2 : (std::uint64_t{1} << (t + 1)) - 1; }

// Number of threshold queries for a block of 2^m - 1 words, or nullopt.
inline std::optional<unsigned> search_width(std::size_t n) {
  const std::uint64_t s = n + 1;
  if (n == 0 || (s & (s - 1)) != 0) return std::nullopt;
  return static_cast<unsigned>(std::countr_zero(s));
}

// Counts accepted words with m threshold dovetails, most significant bit first.
inline std::size_t binary_search_count(const Program& machine, std::span<const Word> words, std::uint64_t fuel) {
  auto m = search_width(words.size());
  if (!m) throw std::invalid_argument("binary_search_count: need 2^m - 1 words");
  std::size_t counter = 0;
  for (unsigned e = *m; e-- > 0;) {
    const std::size_t threshold = counter + (std::size_t{1} << e);
    if (dovetail(machine, words, threshold, fuel).reached_target) counter = threshold;
  }
  return counter;
}

inline std::size_t binary_search_count(MachineIndex machine, std::span<const Word> words, std::uint64_t fuel) {
  return binary_search_count(decode(machine), words, fuel);
}

// ---------------------------------------------------------------------------

enum class PositionRole : std::uint8_t { Random, Bootstrap, Win, Encode, Unusable, Idle };

inline const char* to_string(PositionRole r) {
  switch (r) {
    case PositionRole::Random: return "random";
    case PositionRole::Bootstrap: return "bootstrap";
    case PositionRole::Win: return "win";
    case PositionRole::Encode: return "encode";
    case PositionRole::Unusable: return "unusable";
    case PositionRole::Idle: return "idle";
  }
  return "?";
}

struct LearnerConfig {
  std::uint64_t k = 1;       // tries per machine
  std::uint64_t j = 0;       // atom in [0, 4^k)
  std::uint64_t fuel = 1000;
  MachineEnumeration enumeration{EnumerationKind::LibraryFirst};
  bool probabilistic = false;
  std::uint64_t seed = 0;

  unsigned slot_width() const { return probabilistic ? 4 : 2; }
  unsigned random_prefix() const { return probabilistic ? 2 : 0; }

  std::uint64_t machine_slot(std::uint64_t h) const { return probabilistic ? triangle(h) : h / k; }
  MachineIndex machine_of(std::uint64_t h) const { return enumeration.at(machine_slot(h)); }
};

// Counter-based generator: SplitMix64 finaliser over seed + (counter+1)*golden.
inline std::uint64_t counter_rng(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t z = seed + (counter + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline Bit random_bootstrap_bit(std::uint64_t seed, std::uint64_t h, unsigned offset) {
  return static_cast<Bit>(counter_rng(seed, 2 * h + offset) >> 63);
}

struct Chain {
  std::uint64_t h = 0;
  Position slot_start = 0;  // a^2 of the first slot
  std::vector<std::vector<Position>> blocks;
};

struct PositionInfo {
  PositionRole role = PositionRole::Idle;
  std::optional<std::uint64_t> owner;
  std::uint64_t block = 0;
  std::uint64_t index = 0;  // index within block
  std::uint64_t e = 0;      // positions of the block after this one
};

// Pass-one bookkeeping.  A pure function of the delta values processed.
class LearnerState {
 public:
  explicit LearnerState(const LearnerConfig& cfg) : cfg_(&cfg), layout_(cfg.slot_width()) {}

  std::uint64_t active() const { return active_; }
  bool dead(std::uint64_t h) const { return h < dead_.size() && dead_[h]; }
  const std::map<std::uint64_t, Chain>& chains() const { return chains_; }
  const std::vector<std::uint64_t>& dead_list() const { return dead_order_; }
  // (hypothesis, position at which it became the least live hypothesis)
  const std::vector<std::pair<std::uint64_t, Position>>& activations() const { return activations_; }
  const SlotLayout& layout() const { return layout_; }
  Position processed() const { return next_; }

  const Chain* chain(std::uint64_t h) const {
    auto it = chains_.find(h);
    return it == chains_.end() ? nullptr : &it->second;
  }

  // Processes the next position.  delta is the outcome at that position when
  // it is already known; for the current round pass nullopt.
  PositionInfo advance(std::optional<Bit> delta) {
    const Position i = next_++;
    if (activations_.empty()) activations_.emplace_back(0, 0);
    if (auto it = where_.find(i); it != where_.end()) return visit_chain_position(i, it->second, delta);
    if (auto s = layout_.slot_of(i); s && s->second == 0) {
      const std::uint64_t h = triangle(s->first);
      if (!dead(h) && !chains_.contains(h)) return start_chain(h, i, delta);
    }
    PositionInfo info;
    info.role = delta ? PositionRole::Idle : PositionRole::Unusable;
    return info;
  }

  // Role of position processed() without mutating, when no mutation is
  // needed to answer; otherwise nullopt.
  std::optional<PositionInfo> peek() const {
    const Position i = next_;
    if (auto it = where_.find(i); it != where_.end()) {
      const Slot& s = it->second;
      PositionInfo info = describe(s);
      if (info.role == PositionRole::Encode || info.role == PositionRole::Bootstrap) {
        if (info.e + 1 == encoding_width(s.block)) return std::nullopt;  // lays out a block
      }
      return info;
    }
    if (auto s = layout_.slot_of(i); s && s->second == 0) {
      const std::uint64_t h = triangle(s->first);
      if (!dead(h) && !chains_.contains(h)) return std::nullopt;
    }
    PositionInfo info;
    info.role = PositionRole::Unusable;
    return info;
  }

  // For invariant checks: every position currently assigned to a block.
  std::size_t assigned_positions() const { return where_.size(); }

 private:
  struct Slot {
    std::uint64_t h;
    std::uint64_t block;  // kRandomBlock for random bootstrap positions
    std::uint64_t index;
  };
  static constexpr std::uint64_t kRandomBlock = ~std::uint64_t{0};

  PositionInfo describe(const Slot& s) const {
    PositionInfo info;
    info.owner = s.h;
    if (s.block == kRandomBlock) {
      info.role = PositionRole::Random;
      info.index = s.index;
      return info;
    }
    const Chain& c = chains_.at(s.h);
    const std::uint64_t size = c.blocks[s.block].size();
    info.block = s.block;
    info.index = s.index;
    info.e = size - 1 - s.index;
    const std::uint64_t m = encoding_width(s.block);
    if (info.e >= m) info.role = PositionRole::Win;
    else info.role = s.block == 0 ? PositionRole::Bootstrap : PositionRole::Encode;
    return info;
  }

  PositionInfo visit_chain_position(Position, const Slot& s, std::optional<Bit> delta) {
    const Slot slot = s;  // s may dangle after a kill
    PositionInfo info = describe(slot);
    if (info.role == PositionRole::Win) {
      if (delta && *delta == 1) kill(slot.h);
    } else if (info.role != PositionRole::Random && info.e + 1 == encoding_width(slot.block)) {
      Chain& c = chains_.at(slot.h);
      if (c.blocks.size() == slot.block + 2) lay_out(c, slot.block + 2);
    }
    return info;
  }

  PositionInfo start_chain(std::uint64_t h, Position i, std::optional<Bit> delta) {
    Chain& c = chains_[h];
    c.h = h;
    c.slot_start = i;
    const unsigned prefix = cfg_->random_prefix();
    for (unsigned o = 0; o < prefix; ++o) where_[i + o] = {h, kRandomBlock, o};
    c.blocks.push_back({i + prefix, i + prefix + 1});
    where_[i + prefix] = {h, 0, 0};
    where_[i + prefix + 1] = {h, 0, 1};
    lay_out(c, 1);
    return visit_chain_position(i, where_.at(i), delta);
  }

  bool reserved_for_live(Position p) const {
    auto owner = layout_.owner(p);
    return owner && !dead(*owner);
  }

  void lay_out(Chain& c, std::uint64_t t) {
    const std::uint64_t want = block_size(t);
    const Position after = c.blocks.back().back();
    std::vector<Position> block;
    block.reserve(want);
    if (c.h == active_) {
      for (Position p = after + 1; block.size() < want; ++p) {
        auto owner = layout_.owner(p);
        const bool mine = owner && *owner == c.h;
        if ((mine || !owner || dead(*owner)) && !where_.contains(p)) block.push_back(p);
      }
    } else {
      const unsigned width = layout_.width();
      layout_.for_each_slot(c.h, 0, [&](std::uint64_t a, std::uint64_t) {
        for (unsigned o = 0; o < width && block.size() < want; ++o) {
          const Position p = a * a + o;
          if (p > after) block.push_back(p);
        }
        return block.size() < want;
      });
    }
    for (std::uint64_t idx = 0; idx < block.size(); ++idx) where_[block[idx]] = {c.h, t, idx};
    c.blocks.push_back(std::move(block));
  }

  void kill(std::uint64_t h) {
    if (h >= dead_.size()) dead_.resize(h + 1, 0);
    dead_[h] = 1;
    dead_order_.push_back(h);
    if (auto it = chains_.find(h); it != chains_.end()) {
      const Chain& c = it->second;
      for (const auto& b : c.blocks)
        for (Position p : b) where_.erase(p);
      for (unsigned o = 0; o < cfg_->random_prefix(); ++o) where_.erase(c.slot_start + o);
      chains_.erase(it);
    }
    if (h == active_) {
      while (dead(active_)) ++active_;
      activations_.emplace_back(active_, next_);
    }
  }

  const LearnerConfig* cfg_;
  SlotLayout layout_;
  Position next_ = 0;
  std::uint64_t active_ = 0;
  std::vector<std::uint8_t> dead_;
  std::vector<std::uint64_t> dead_order_;
  std::vector<std::pair<std::uint64_t, Position>> activations_;
  std::map<std::uint64_t, Chain> chains_;
  std::unordered_map<Position, Slot> where_;
};

// One decoded block: the count read back from the transcript for block t+1
// of a chain, and the membership it implies.
struct DecodedBlock {
  std::uint64_t block = 0;  // index of the decoded (next) block
  std::vector<Position> positions;
  std::size_t count = 0;
  bool terminated = true;  // the decoding dovetail reached the count
  std::vector<Bit> predictions;
};

struct LearnerEvaluation {
  Response response;
  PositionInfo info;
  std::uint64_t active = 0;
  std::vector<DecodedBlock> decoded;  // blocks decoded by pass two so far
};

class UniversalLearner final : public Strategy {
 public:
  explicit UniversalLearner(LearnerConfig cfg) : cfg_(cfg) {
    if (cfg_.k < 1) throw std::invalid_argument("learner: k must be >= 1");
    if (!cfg_.probabilistic && (cfg_.k >= 32 || cfg_.j >= (std::uint64_t{1} << (2 * cfg_.k))))
      throw std::invalid_argument("learner: j must lie in [0, 4^k)");
  }

  const LearnerConfig& config() const { return cfg_; }

  Response respond(WordView history) const override { return evaluate(history).response; }

  std::string describe() const override {
    if (cfg_.probabilistic) return "prob:seed=" + std::to_string(cfg_.seed);
    return "alg3:j=" + std::to_string(cfg_.j) + ",k=" + std::to_string(cfg_.k);
  }

  // Full evaluation of the round following `history`.
  LearnerEvaluation evaluate(WordView history) const {
    std::lock_guard lock(mu_);
    const LearnerState& base = replay_locked(history);
    std::optional<LearnerState> scratch;
    PositionInfo info;
    if (auto peeked = base.peek()) {
      info = *peeked;
    } else {
      scratch.emplace(base);
      info = scratch->advance(std::nullopt);
    }
    const LearnerState& state = scratch ? *scratch : base;

    LearnerEvaluation ev;
    ev.info = info;
    ev.active = state.active();
    if (info.role == PositionRole::Unusable) {
      ev.response = {1, false};
      return ev;
    }
    const std::uint64_t h = *info.owner;
    ev.response = predict_locked(state, h, history, &ev.decoded);
    return ev;
  }

  // Pass-one state after the whole history.
  LearnerState state_after(WordView history) const {
    std::lock_guard lock(mu_);
    return replay_locked(history);
  }

  // Pass two for hypothesis h over the complete history (no current round):
  // every block whose decoding position lies inside the history.
  std::vector<DecodedBlock> decode_chain(WordView history, std::uint64_t h) const {
    std::lock_guard lock(mu_);
    const LearnerState& state = replay_locked(history);
    std::vector<DecodedBlock> out;
    if (!state.chain(h)) return out;
    walk_locked(state, h, history, std::nullopt, &out);
    return out;
  }

 private:
  struct MemoKey {
    MachineIndex machine;
    std::vector<Position> positions;
    std::size_t target;
    auto operator<=>(const MemoKey&) const = default;
  };

  const LearnerState& replay_locked(WordView history) const {
    const bool extends = cache_ && cache_->prefix.size() <= history.size() &&
                         std::equal(cache_->prefix.begin(), cache_->prefix.end(), history.begin());
    if (!extends) cache_.emplace(Cache{Word{}, LearnerState(cfg_)});
    for (std::size_t i = cache_->prefix.size(); i < history.size(); ++i) {
      cache_->state.advance(history[i]);
      cache_->prefix.push_back(history[i]);
    }
    return cache_->state;
  }

  const DovetailResult& dovetail_locked(MachineIndex machine, const std::vector<Position>& positions,
                                        std::size_t target) const {
    MemoKey key{machine, positions, target};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const Program& program = program_locked(machine);
    std::vector<Word> words;
    words.reserve(positions.size());
    for (Position p : positions) words.push_back(word_at(p));
    return memo_.emplace(std::move(key), dovetail(program, words, target, cfg_.fuel)).first->second;
  }

  const Program& program_locked(MachineIndex machine) const {
    auto it = programs_.find(machine);
    if (it == programs_.end()) it = programs_.emplace(machine, decode(machine)).first;
    return it->second;
  }

  Response predict_locked(const LearnerState& state, std::uint64_t h, WordView history,
                          std::vector<DecodedBlock>* decoded) const {
    return walk_locked(state, h, history, static_cast<Position>(history.size()), decoded);
  }

  // Walks h's chain.  With `current` set, returns the output for that
  // position; otherwise decodes everything inside the history.
  Response walk_locked(const LearnerState& state, std::uint64_t h, WordView history, std::optional<Position> current,
                       std::vector<DecodedBlock>* decoded) const {
    const Chain& chain = *state.chain(h);
    const Position n = current ? *current : static_cast<Position>(history.size());
    const Position slot = chain.slot_start;
    const unsigned prefix = cfg_.random_prefix();

    if (current && n >= slot && n < slot + prefix)
      return {random_bootstrap_bit(cfg_.seed, h, static_cast<unsigned>(n - slot)), false};

    const MachineIndex machine = cfg_.machine_of(h);
    std::vector<Bit> predictions(2);
    if (cfg_.probabilistic) {
      // Readback of the seeded bits: delta = random xor evader bit.
      if (slot + 1 >= history.size() && current) return {0, false};
      predictions[0] = history[slot];
      predictions[1] = history[slot + 1];
    } else {
      const std::uint64_t try_index = h % cfg_.k;
      const std::uint64_t digits = cfg_.j >> (2 * try_index);
      predictions[0] = static_cast<Bit>(digits & 1U);
      predictions[1] = static_cast<Bit>((digits >> 1) & 1U);
    }

    for (std::uint64_t t = 0; t < chain.blocks.size(); ++t) {
      const auto& block = chain.blocks[t];
      if (block.front() > n || (!current && block.front() >= n)) break;
      const std::uint64_t m = encoding_width(t);
      const std::uint64_t size = block.size();
      std::size_t counter = 0;
      for (std::uint64_t idx = 0; idx < size; ++idx) {
        const Position pos = block[idx];
        if (current ? pos > n : pos >= n) break;
        const std::uint64_t e = size - 1 - idx;
        if (e >= m) {
          if (current && pos == n) return {predictions[idx], false};
          continue;
        }
        if (t + 1 >= chain.blocks.size()) throw std::logic_error("learner: next block missing");
        const auto& next = chain.blocks[t + 1];
        if (current && pos == n) {
          const std::size_t threshold = counter + (std::size_t{1} << e);
          return {static_cast<Bit>(dovetail_locked(machine, next, threshold).reached_target), false};
        }
        if (predictions[idx] != history[pos]) counter += std::size_t{1} << e;
        if (e == 0) {
          const DovetailResult& res = dovetail_locked(machine, next, counter);
          DecodedBlock d;
          d.block = t + 1;
          d.positions = next;
          d.count = counter;
          d.terminated = res.reached_target;
          if (!res.reached_target) {
            if (decoded) decoded->push_back(std::move(d));
            // The decoding simulation never finishes: the evaluation diverges.
            return {0, true};
          }
          std::vector<Bit> next_predictions(next.size(), 1);
          for (const auto& [id, steps] : res.halted) next_predictions[id] = 0;
          d.predictions = next_predictions;
          if (decoded) decoded->push_back(std::move(d));
          predictions = std::move(next_predictions);
        }
      }
    }
    return {0, false};
  }

  struct Cache {
    Word prefix;
    LearnerState state;
  };

  LearnerConfig cfg_;
  mutable std::mutex mu_;
  mutable std::optional<Cache> cache_;
  mutable std::map<MemoKey, DovetailResult> memo_;
  mutable std::unordered_map<MachineIndex, Program> programs_;
};

// The j'th pure strategy of the 4^k-atom mixture.
inline std::shared_ptr<const UniversalLearner> alg3_pure_strategy(
    std::uint64_t j, std::uint64_t k, std::uint64_t fuel,
    MachineEnumeration enumeration = MachineEnumeration(EnumerationKind::LibraryFirst)) {
  LearnerConfig cfg;
  cfg.j = j;
  cfg.k = k;
  cfg.fuel = fuel;
  cfg.enumeration = enumeration;
  return std::make_shared<UniversalLearner>(cfg);
}

inline MixedStrategy alg3_mixture(std::uint64_t k, std::uint64_t fuel,
                                  MachineEnumeration enumeration = MachineEnumeration(EnumerationKind::LibraryFirst)) {
  if (k < 1 || k > 8) throw std::invalid_argument("alg3_mixture: k must be in [1, 8]");
  std::vector<StrategyPtr> atoms;
  const std::uint64_t count = std::uint64_t{1} << (2 * k);
  for (std::uint64_t j = 0; j < count; ++j) atoms.push_back(alg3_pure_strategy(j, k, fuel, enumeration));
  return MixedStrategy::uniform(std::move(atoms), "alg3-mixture:k=" + std::to_string(k));
}

inline std::shared_ptr<const UniversalLearner> prob_learner_strategy(
    std::uint64_t seed, std::uint64_t fuel,
    MachineEnumeration enumeration = MachineEnumeration(EnumerationKind::LibraryFirst)) {
  LearnerConfig cfg;
  cfg.probabilistic = true;
  cfg.seed = seed;
  cfg.fuel = fuel;
  cfg.enumeration = enumeration;
  return std::make_shared<UniversalLearner>(cfg);
}

// For the deterministic learner: the atom whose guessed bits match the evader
// at hypothesis h's guessed positions.
inline std::uint64_t matching_atom(std::uint64_t h, std::uint64_t k, Bit first, Bit second) {
  return (std::uint64_t(first) | (std::uint64_t(second) << 1)) << (2 * (h % k));
}

}  // namespace imp
