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

// Difference density between the chameleon and each governing machine at
// the end of every super-round.

#include <iostream>

#include "imp/imp.hpp"

int main() {
  const imp::MachineEnumeration en(imp::EnumerationKind::LibraryFirst);
  const auto cham = imp::chameleon_language(1000, en);
  for (std::uint64_t y = 1; y <= 6; ++y) {
    const std::uint64_t end = imp::factorial(y + 1);
    const std::uint64_t g = imp::triangle(y);
    const auto lg = imp::machine_language(en.at(g), 1000);
    const imp::DissimEstimate d = imp::dissim(*cham, *lg, end, end);
    std::cout << "y=" << y << "\tg=" << g << "\tend=" << end << "\tdensity=" << imp::to_string(d.value) << '\n';
  }
}
