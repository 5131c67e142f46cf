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

// Built with IMP_FAULT_TRIANGLE.  Succeeds iff the learner criteria fail.

#include <cstdlib>
#include <iostream>

#include "imp/acceptance.hpp"

#ifndef IMP_FAULT_TRIANGLE
#error "mutation_main.cpp expects IMP_FAULT_TRIANGLE"
#endif

int main() {
  const auto results = imp::acceptance_suite(&std::cout, {4, 5, 6, 7, 9});
  bool learner_caught = false;
  for (const auto& r : results)
    if (r.id == 4 && !r.pass) learner_caught = true;
  std::cout << (learner_caught ? "fault detected" : "fault NOT detected") << '\n';
  return learner_caught ? EXIT_SUCCESS : EXIT_FAILURE;
}
