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

// A fuel-bounded counter machine with a streaming binary input, and its
// Goedel numbering.
//
// Machine model
//   * three unbounded counters r0, r1, r2 (initially 0);
//   * a one-way read head over the input word;
//   * a program counter.  Running off the end of the program rejects.
//
// Every executed instruction costs one unit of fuel.  Jump targets are
// absolute instruction indices in [0, length).
//
//   acc            halt and accept
//   rej            halt and reject
//   inc rK         rK += 1
//   dec rK         rK -= 1 (saturating at 0)
//   jmp T          goto T
//   read0 T        if the next input symbol is 0: consume it, goto T
//   read1 T        if the next input symbol is 1: consume it, goto T
//   jend T         if the input is exhausted: goto T
//   jz rK T        if rK == 0: goto T
//
// Three counters plus the input suffice to simulate a Minsky two-counter
// machine on any encoding of the input, so the model is Turing-complete.
//
// Goedel numbering (bijective, total)
//   For a program of length L every instruction has a code in [0, A(L)),
//   A(L) = 8 + 7L:
//     0 acc, 1 rej, 2..4 inc r0..r2, 5..7 dec r0..r2,
//     8 + kind*L + target  with kind 0 jmp, 1 read0, 2 read1, 3 jend,
//                               4..6 jz r0..r2.
//   index(p) = sum_{l < L} A(l)^l + sum_t code_t * A(L)^t
//   (instruction 0 is the least significant digit).  Index 0 is the empty
//   program, which rejects immediately.  Every 64-bit index decodes; the
//   top of the range holds a prefix of the length-11 programs.

#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace imp {

using Bit = std::uint8_t;
using Word = std::vector<Bit>;
using WordView = std::span<const Bit>;
using MachineIndex = std::uint64_t;

inline constexpr int kRegisterCount = 3;

enum class Op : std::uint8_t { Acc, Rej, Inc, Dec, Jmp, Read0, Read1, Jend, Jz };

struct Instruction {
  Op op = Op::Rej;
  std::uint8_t reg = 0;
  std::uint32_t target = 0;

  friend bool operator==(const Instruction&, const Instruction&) = default;
};

struct Program {
  std::vector<Instruction> code;

  std::size_t size() const { return code.size(); }
  friend bool operator==(const Program&, const Program&) = default;
};

enum class Verdict : std::uint8_t { Accepted, Rejected, FuelExhausted };

struct RunOutcome {
  Verdict verdict = Verdict::Rejected;
  std::uint64_t steps_used = 0;

  bool accepted() const { return verdict == Verdict::Accepted; }
  bool halted() const { return verdict != Verdict::FuelExhausted; }
  friend bool operator==(const RunOutcome&, const RunOutcome&) = default;
};

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Accepted: return "accepted";
    case Verdict::Rejected: return "rejected";
    case Verdict::FuelExhausted: return "fuel-exhausted";
  }
  return "?";
}

inline Word parse_word(std::string_view text) {
  Word w;
  w.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') throw std::invalid_argument("word must be over {0,1}: " + std::string(text));
    w.push_back(static_cast<Bit>(c - '0'));
  }
  return w;
}

inline std::string format_word(WordView w) {
  std::string s;
  s.reserve(w.size());
  for (Bit b : w) s.push_back(b ? '1' : '0');
  return s;
}

namespace detail {

inline constexpr std::uint64_t alphabet_size(std::uint64_t length) { return 8 + 7 * length; }

// A(L)^L, or nullopt when it exceeds 64 bits.
inline std::optional<std::uint64_t> programs_of_length(std::uint64_t length) {
  const std::uint64_t a = alphabet_size(length);
  std::uint64_t total = 1;
  for (std::uint64_t i = 0; i < length; ++i) {
    if (total > std::numeric_limits<std::uint64_t>::max() / a) return std::nullopt;
    total *= a;
  }
  return total;
}

inline std::uint64_t instruction_code(const Instruction& ins, std::uint64_t length) {
  switch (ins.op) {
    case Op::Acc: return 0;
    case Op::Rej: return 1;
    case Op::Inc: return 2 + ins.reg;
    case Op::Dec: return 5 + ins.reg;
    case Op::Jmp: return 8 + 0 * length + ins.target;
    case Op::Read0: return 8 + 1 * length + ins.target;
    case Op::Read1: return 8 + 2 * length + ins.target;
    case Op::Jend: return 8 + 3 * length + ins.target;
    case Op::Jz: return 8 + (4 + ins.reg) * length + ins.target;
  }
  return 1;
}

inline Instruction instruction_from_code(std::uint64_t code, std::uint64_t length) {
  if (code == 0) return {Op::Acc, 0, 0};
  if (code == 1) return {Op::Rej, 0, 0};
  if (code < 5) return {Op::Inc, static_cast<std::uint8_t>(code - 2), 0};
  if (code < 8) return {Op::Dec, static_cast<std::uint8_t>(code - 5), 0};
  const std::uint64_t kind = (code - 8) / length;
  const auto target = static_cast<std::uint32_t>((code - 8) % length);
  switch (kind) {
    case 0: return {Op::Jmp, 0, target};
    case 1: return {Op::Read0, 0, target};
    case 2: return {Op::Read1, 0, target};
    case 3: return {Op::Jend, 0, target};
    default: return {Op::Jz, static_cast<std::uint8_t>(kind - 4), target};
  }
}

}  // namespace detail

// Structural validity: register numbers and jump targets in range.
inline bool well_formed(const Program& p) {
  for (const auto& ins : p.code) {
    if (ins.reg >= kRegisterCount) return false;
    const bool branches = ins.op == Op::Jmp || ins.op == Op::Read0 || ins.op == Op::Read1 ||
                          ins.op == Op::Jend || ins.op == Op::Jz;
    if (branches && ins.target >= p.size()) return false;
  }
  return true;
}

inline Program decode(MachineIndex index) {
  std::uint64_t length = 0;
  std::uint64_t rest = index;
  while (true) {
    auto count = detail::programs_of_length(length);
    if (!count || rest < *count) break;
    rest -= *count;
    ++length;
  }
  Program p;
  p.code.reserve(length);
  const std::uint64_t a = detail::alphabet_size(length);
  for (std::uint64_t t = 0; t < length; ++t) {
    p.code.push_back(detail::instruction_from_code(rest % a, length));
    rest /= a;
  }
  return p;
}

// Inverse of decode for programs whose index fits in 64 bits.
inline std::optional<MachineIndex> encode(const Program& p) {
  if (!well_formed(p)) return std::nullopt;
  const std::uint64_t length = p.size();
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t offset = 0;
  for (std::uint64_t l = 0; l < length; ++l) {
    auto count = detail::programs_of_length(l);
    if (!count || offset > kMax - *count) return std::nullopt;
    offset += *count;
  }
  const std::uint64_t a = detail::alphabet_size(length);
  std::uint64_t rank = 0;
  for (std::uint64_t t = length; t-- > 0;) {
    const std::uint64_t code = detail::instruction_code(p.code[t], length);
    if (rank > (kMax - code) / a) return std::nullopt;
    rank = rank * a + code;
  }
  if (offset > kMax - rank) return std::nullopt;
  return offset + rank;
}

// Resumable execution state; one step at a time for the dovetailer.
class Execution {
 public:
  Execution(const Program& program, WordView input) : program_(&program), input_(input) {}

  bool finished() const { return done_; }
  Verdict verdict() const { return verdict_; }
  std::uint64_t steps() const { return steps_; }

  // Executes at most one instruction. Halting by running off the end of the
  // program is free.  Returns true while the machine is still running.
  bool step() {
    if (done_) return false;
    if (pc_ >= program_->size()) return halt(Verdict::Rejected);
    ++steps_;
    const Instruction& ins = program_->code[pc_];
    switch (ins.op) {
      case Op::Acc: return halt(Verdict::Accepted);
      case Op::Rej: return halt(Verdict::Rejected);
      case Op::Inc: ++regs_[ins.reg]; ++pc_; break;
      case Op::Dec:
        if (regs_[ins.reg] > 0) --regs_[ins.reg];
        ++pc_;
        break;
      case Op::Jmp: pc_ = ins.target; break;
      case Op::Read0:
      case Op::Read1: {
        const Bit want = ins.op == Op::Read1 ? 1 : 0;
        if (head_ < input_.size() && input_[head_] == want) {
          ++head_;
          pc_ = ins.target;
        } else {
          ++pc_;
        }
        break;
      }
      case Op::Jend: pc_ = head_ == input_.size() ? ins.target : pc_ + 1; break;
      case Op::Jz: pc_ = regs_[ins.reg] == 0 ? ins.target : pc_ + 1; break;
    }
    if (pc_ >= program_->size()) return halt(Verdict::Rejected);
    return true;
  }

  // False when the next step() halts for free (empty program).
  bool next_costs_fuel() const { return !done_ && pc_ < program_->size(); }

 private:
  bool halt(Verdict v) {
    done_ = true;
    verdict_ = v;
    return false;
  }

  const Program* program_;
  WordView input_;
  std::size_t pc_ = 0;
  std::size_t head_ = 0;
  std::uint64_t regs_[kRegisterCount] = {0, 0, 0};
  std::uint64_t steps_ = 0;
  bool done_ = false;
  Verdict verdict_ = Verdict::Rejected;
};

inline RunOutcome run(const Program& p, WordView word, std::uint64_t fuel) {
  Execution ex(p, word);
  while (!ex.finished()) {
    if (ex.next_costs_fuel() && ex.steps() == fuel) return {Verdict::FuelExhausted, fuel};
    ex.step();
  }
  return {ex.verdict(), ex.steps()};
}

inline bool accepts(const Program& p, WordView word, std::uint64_t fuel) {
  return run(p, word, fuel).verdict == Verdict::Accepted;
}

inline bool accepts(MachineIndex index, WordView word, std::uint64_t fuel) {
  return accepts(decode(index), word, fuel);
}

// ---------------------------------------------------------------------------
// Text format: one instruction per line, '#' starts a comment, "name:" defines
// a label.  Targets are labels or absolute instruction numbers.

inline std::string format_program(const Program& p) {
  std::ostringstream os;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& ins = p.code[i];
    switch (ins.op) {
      case Op::Acc: os << "acc"; break;
      case Op::Rej: os << "rej"; break;
      case Op::Inc: os << "inc r" << int(ins.reg); break;
      case Op::Dec: os << "dec r" << int(ins.reg); break;
      case Op::Jmp: os << "jmp " << ins.target; break;
      case Op::Read0: os << "read0 " << ins.target; break;
      case Op::Read1: os << "read1 " << ins.target; break;
      case Op::Jend: os << "jend " << ins.target; break;
      case Op::Jz: os << "jz r" << int(ins.reg) << ' ' << ins.target; break;
    }
    os << "    # " << i << '\n';
  }
  return os.str();
}

inline Program parse_program(std::string_view text) {
  struct Pending {
    Instruction ins;
    std::string target;
    std::size_t line;
  };
  std::vector<Pending> pending;
  std::unordered_map<std::string, std::uint32_t> labels;

  auto fail = [](std::size_t line, const std::string& msg) {
    throw std::invalid_argument("program line " + std::to_string(line) + ": " + msg);
  };
  auto parse_reg = [&](const std::string& tok, std::size_t line) -> std::uint8_t {
    if (tok.size() != 2 || tok[0] != 'r' || tok[1] < '0' || tok[1] >= '0' + kRegisterCount)
      fail(line, "bad register '" + tok + "'");
    return static_cast<std::uint8_t>(tok[1] - '0');
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    while (!tok.empty() && tok.front().back() == ':') {
      std::string name = tok.front().substr(0, tok.front().size() - 1);
      if (name.empty() || !labels.emplace(name, static_cast<std::uint32_t>(pending.size())).second)
        fail(line_no, "bad or duplicate label '" + name + "'");
      tok.erase(tok.begin());
    }
    if (tok.empty()) continue;
    const std::string& mnem = tok[0];
    Pending pi{{}, {}, line_no};
    auto want = [&](std::size_t n) {
      if (tok.size() != n) fail(line_no, "'" + mnem + "' takes " + std::to_string(n - 1) + " operand(s)");
    };
    if (mnem == "acc") { want(1); pi.ins.op = Op::Acc; }
    else if (mnem == "rej") { want(1); pi.ins.op = Op::Rej; }
    else if (mnem == "inc") { want(2); pi.ins = {Op::Inc, parse_reg(tok[1], line_no), 0}; }
    else if (mnem == "dec") { want(2); pi.ins = {Op::Dec, parse_reg(tok[1], line_no), 0}; }
    else if (mnem == "jmp") { want(2); pi.ins.op = Op::Jmp; pi.target = tok[1]; }
    else if (mnem == "read0") { want(2); pi.ins.op = Op::Read0; pi.target = tok[1]; }
    else if (mnem == "read1") { want(2); pi.ins.op = Op::Read1; pi.target = tok[1]; }
    else if (mnem == "jend") { want(2); pi.ins.op = Op::Jend; pi.target = tok[1]; }
    else if (mnem == "jz") { want(3); pi.ins = {Op::Jz, parse_reg(tok[1], line_no), 0}; pi.target = tok[2]; }
    else fail(line_no, "unknown instruction '" + mnem + "'");
    pending.push_back(std::move(pi));
  }

  Program p;
  for (auto& pi : pending) {
    if (!pi.target.empty()) {
      if (auto it = labels.find(pi.target); it != labels.end()) {
        pi.ins.target = it->second;
      } else {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
          v = std::stoul(pi.target, &used);
        } catch (const std::exception&) {
          used = 0;
        }
        if (used != pi.target.size()) fail(pi.line, "unknown label '" + pi.target + "'");
        pi.ins.target = static_cast<std::uint32_t>(v);
      }
      if (pi.ins.target >= pending.size()) fail(pi.line, "jump target out of range");
    }
    p.code.push_back(pi.ins);
  }
  return p;
}

}  // namespace imp
