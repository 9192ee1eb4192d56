// Copyright 2026 the djulia authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Runs the acceptance corpus: one PASS/FAIL line per criterion, exit 0 only
// when every criterion passed.  `--seed N` reseeds the randomized corpora;
// `--only ID` (repeatable) restricts to single criteria while debugging.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "djulia/acceptance.hpp"

int main(int argc, char** argv) {
  unsigned seed = 1;
  std::vector<int> only;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) {
      seed = static_cast<unsigned>(std::strtoul(argv[++i], nullptr, 10));
    } else if (arg == "--only" && i + 1 < argc) {
      only.push_back(std::atoi(argv[++i]));
    } else {
      std::cerr << "usage: acceptance_tests [--seed N] [--only ID]...\n";
      return 2;
    }
  }
  std::vector<djulia::CheckResult> results = djulia::run_acceptance(seed, only);
  return djulia::report_acceptance(results, std::cout) ? 0 : 1;
}
