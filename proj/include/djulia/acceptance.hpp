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

#ifndef DJULIA_ACCEPTANCE_HPP
#define DJULIA_ACCEPTANCE_HPP

#include <iosfwd>
#include <string>
#include <vector>

namespace djulia {

// The self-test corpus behind `djulia selftest`: eleven end-to-end checks
// exercising every layer against frozen values, exhaustive small cases, and
// independent oracles.  Each check is pure and deterministic for a fixed
// seed.
struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail;  // failure explanation or a one-line statistic
};

// Runs checks in id order; `only` empty means all.  The seed feeds the
// randomized corpora (fixed default keeps runs byte-identical).
std::vector<CheckResult> run_acceptance(unsigned seed = 1,
                                        const std::vector<int>& only = {});

// One line per check ("[ 3] PASS 0.12s  name — detail"); returns true when
// every check passed.
bool report_acceptance(const std::vector<CheckResult>& results,
                       std::ostream& out);

}  // namespace djulia

#endif  // DJULIA_ACCEPTANCE_HPP
