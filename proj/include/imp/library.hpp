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

// Named machines and machine enumerations.
//
// The table is built once from program text; each entry's Goedel index is
// obtained with encode(), so tests and experiments refer to names only.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "imp/machine.hpp"

namespace imp {

struct NamedMachine {
  std::string name;
  std::string summary;
  bool total;  // halts on every input
  Program program;
  MachineIndex index;
};

namespace detail {

struct LibrarySource {
  const char* name;
  const char* summary;
  bool total;
  const char* text;
};

// Table order is the order of the library-first enumeration.
inline constexpr LibrarySource kLibrarySources[] = {
    {"PARITY", "odd number of ones", true, R"(
even: read0 even
      read1 odd
      rej
odd:  read0 odd
      read1 even
      acc
)"},
    {"LAST_BIT", "last symbol is 1", true, R"(
zero: read0 zero
      read1 one
      rej
one:  read1 one
      read0 zero
      acc
)"},
    {"ONE_OR_LOOP", "contains a 1; loops on words without one", false, R"(
scan: read1 yes
      read0 scan
spin: jmp spin
yes:  acc
)"},
    {"ALL_ZEROS", "empty language", true, R"(
      rej
)"},
    {"ALL_ONES", "complete language", true, R"(
      acc
)"},
    {"EVEN_LENGTH", "even length", true, R"(
even: read0 odd
      read1 odd
      acc
odd:  read0 even
      read1 even
      rej
)"},
    {"FIRST_BIT", "first symbol is 1", true, R"(
      read1 yes
      rej
yes:  acc
)"},
    {"HAS_ONE", "contains a 1", true, R"(
scan: read1 yes
      read0 scan
      rej
yes:  acc
)"},
    {"EVEN_ONES", "even number of ones, parity kept in r0", true, R"(
top:  read0 top
      read1 flip
      jz r0 yes
      rej
flip: jz r0 set
      dec r0
      jmp top
set:  inc r0
      jmp top
yes:  acc
)"},
    {"EVEN_LEN_OR_LOOP", "even length; loops on odd length", false, R"(
even: read0 odd
      read1 odd
      acc
odd:  read0 even
      read1 even
spin: jmp spin
)"},
    {"ZEROS_OR_LOOP", "no 1 at all; loops once a 1 is read", false, R"(
scan: read0 scan
      read1 spin
      acc
spin: jmp spin
)"},
    {"LOOP", "never halts", false, R"(
spin: jmp spin
)"},
};

inline std::vector<NamedMachine> build_library() {
  std::vector<NamedMachine> out;
  for (const auto& src : kLibrarySources) {
    Program p = parse_program(src.text);
    auto idx = encode(p);
    if (!idx) throw std::logic_error(std::string("library program does not fit a 64-bit index: ") + src.name);
    out.push_back({src.name, src.summary, src.total, std::move(p), *idx});
  }
  return out;
}

}  // namespace detail

inline const std::vector<NamedMachine>& library() {
  static const std::vector<NamedMachine> table = detail::build_library();
  return table;
}

inline const NamedMachine* find_machine(std::string_view name) {
  for (const auto& m : library())
    if (m.name == name) return &m;
  return nullptr;
}

inline const NamedMachine& named(std::string_view name) {
  if (auto* m = find_machine(name)) return *m;
  throw std::invalid_argument("unknown machine name: " + std::string(name));
}

inline MachineIndex index_of(std::string_view name) { return named(name).index; }

// An enumeration T_0, T_1, ... of all machines.  Goedel order is the identity
// on indices; library-first lists the named table, then every index in Goedel
// order (repetitions are harmless).
enum class EnumerationKind { Godel, LibraryFirst };

class MachineEnumeration {
 public:
  explicit MachineEnumeration(EnumerationKind kind = EnumerationKind::Godel) : kind_(kind) {}

  MachineIndex at(std::uint64_t slot) const {
    if (kind_ == EnumerationKind::Godel) return slot;
    const auto& lib = library();
    if (slot < lib.size()) return lib[slot].index;
    return slot - lib.size();
  }

  EnumerationKind kind() const { return kind_; }
  const char* name() const { return kind_ == EnumerationKind::Godel ? "godel" : "library"; }

  static MachineEnumeration parse(std::string_view s) {
    if (s == "godel") return MachineEnumeration(EnumerationKind::Godel);
    if (s == "library") return MachineEnumeration(EnumerationKind::LibraryFirst);
    throw std::invalid_argument("unknown enumeration '" + std::string(s) + "' (expected godel|library)");
  }

  friend bool operator==(const MachineEnumeration&, const MachineEnumeration&) = default;

 private:
  EnumerationKind kind_;
};

}  // namespace imp
