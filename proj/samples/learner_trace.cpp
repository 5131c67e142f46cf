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

// Roles of the first rounds of a deterministic learner against co-na(PARITY).

#include <iostream>

#include "imp/imp.hpp"

int main() {
  const auto learner = imp::alg3_pure_strategy(3, 1, 1000);
  const imp::StrategyPtr evader = imp::na_wrap(imp::complement(imp::named_language("PARITY", 1000)));
  const imp::Transcript t = imp::play(*learner, *evader, 128);
  for (std::size_t n = 0; n < t.rounds(); ++n) {
    const imp::Word prefix(t.delta.begin(), t.delta.begin() + static_cast<std::ptrdiff_t>(n));
    const imp::LearnerEvaluation ev = learner->evaluate(prefix);
    std::cout << n << '\t' << imp::to_string(ev.info.role) << '\t' << "active=" << ev.active;
    if (ev.info.owner) std::cout << "\towner=" << *ev.info.owner << "\tblock=" << ev.info.block;
    std::cout << "\tdelta=" << int(t.delta[n]) << '\n';
  }
  std::cout << "losses: " << t.losses_eq() << "/" << t.rounds() << '\n';
}
