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

#ifndef DJULIA_TORSION_HPP
#define DJULIA_TORSION_HPP

#include <vector>

#include "djulia/module.hpp"

namespace djulia {

// Degree bounds satisfied by every torsion point x = n/d in lowest terms:
// torsion points lie in the filled Julia set at every place, so d is
// supported on the bad places with multiplicities -nu_B and the numerator
// degree is controlled by nu_B at infinity.
struct TorsionBounds {
  long long num_deg = 0;
  long long den_deg = 0;
};
TorsionBounds torsion_degree_bounds(const DrinfeldModule& phi);

// Smallest-degree finite place where every coefficient is integral and the
// top coefficient is a unit (the reduction stays a Drinfeld module of the
// same rank there).
Place smallest_good_place(const DrinfeldModule& phi);

// All a-torsion points phi[a](L): complete local root isolation at a good
// place, rational reconstruction within the torsion degree bounds, then
// exact re-verification of phi_a(x) = 0.  Always contains 0; sorted.
std::vector<RatFunc> kernel_points(const DrinfeldModule& phi, const PolyA& a);

// The full torsion submodule of phi(L) with its A-module structure.
struct TorsionModule {
  std::vector<RatFunc> points;           // every torsion point, sorted
  std::vector<PolyA> invariant_factors;  // d_1 | d_2 | ... (monic, nonunit)
  PolyA annihilator;                     // largest invariant factor; 1 if trivial
  long long size_log_q = 0;              // dim_{F_q} of the torsion module
};

// Only primes p with deg p <= deg w for every good place w of residue
// characteristic != p can support rational torsion (reduction is injective
// on phi[p] there), so candidates are the primes of degree at most the
// smallest good-place degree; each p-part is climbed until it stabilizes.
TorsionModule torsion_global(const DrinfeldModule& phi);

}  // namespace djulia

#endif  // DJULIA_TORSION_HPP
