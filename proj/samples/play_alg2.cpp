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

// Universal pursuer against the first few Goedel-numbered machines.

#include <iostream>

#include "imp/imp.hpp"

int main() {
  const imp::StrategyPtr pursuer = imp::alg2_strategy(2000);
  for (imp::MachineIndex x = 0; x < 16; ++x) {
    const imp::StrategyPtr target = imp::machine_strategy(x, 2000);
    const imp::Transcript t = imp::play(*pursuer, *target, 500);
    const imp::PayoffEstimate p = imp::payoff(t, 250);
    std::cout << "T" << x << "\t" << imp::format_program(imp::decode(x)) << "\tlosses=" << t.losses_eq()
              << "\ts_ne=" << imp::to_string(p.s_ne) << '\n';
  }
}
