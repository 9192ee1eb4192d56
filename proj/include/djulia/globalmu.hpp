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

#pragma once

#include <gmpxx.h>

#include <utility>
#include <vector>

#include "djulia/localdyn.hpp"

namespace djulia {

// Global assembly of the per-place dynamical invariants: the places of bad
// reduction, the set S_phi(a) of places whose component module survives
// multiplication by a, the proportion mu(phi, N, a) of the finite j-height
// that a kills, the uniform torsion bound it buys, and the adelic
// restatement of the mu >= 1/q condition.

// Local j-contribution at every place in the support of the coefficients
// (plus infinity), sorted; j_v vanishes off this set, and the values sum to
// the height of the j-invariant.
std::vector<std::pair<Place, Rat>> per_place_j(const DrinfeldModule& phi);

// Places (finite and infinite) with j_v > 0, i.e. without potentially good
// reduction.
std::vector<Place> bad_places(const DrinfeldModule& phi);

// Finite places whose component module is not annihilated by a_gen.  Only
// bad places can contribute (elsewhere the component module is trivial).
// Throws IncompleteComponentData when a component module could not be
// resolved within its degree budget.
std::vector<Place> S_of_ideal(const DrinfeldModule& phi, const PolyA& a_gen);

struct MuResult {
  Rat mu;                                          // in [0, 1]
  std::vector<Place> S_bad;                        // j_v > 0, sorted
  std::vector<Place> S_a;                          // S_phi(a_gen), sorted
  std::vector<Place> witness_S;                    // optimal excluded set
  std::vector<std::pair<Place, Rat>> per_place_j;  // support places + infinity
};

// mu(phi, N, a_gen) = max over finite-place sets S with #S <= N of
//   (sum_{v not in S_phi(a) or S} j_v) / (sum_{v not in S} j_v),
// an empty denominator counting as 1.  Excluding a place with j_v = 0
// changes neither sum and removing mass present in both sums only lowers
// the ratio, so the maximum is met either by excluding every finite bad
// place (when N allows: value 1) or by excluding the members of S_phi(a)
// with the largest j_v; the search space collapses to that greedy choice.
MuResult mu(const DrinfeldModule& phi, long long N, const PolyA& a_gen);

// The uniform torsion cardinality bound Norm(a)^r * q^(4 r^2 (d + N)) where
// d = num_gens * deg_T covers the degree of a generator set of A over F_q
// (for A = F_q[T] the defaults d = 1) and the base field is L = K.
mpz_class torsion_bound(int r, long long N, const PolyA& a_gen,
                        int num_gens = 1, int deg_T = 1);

// Adelic restatement: for S = {infinity} union S_phi(a), test
//   sum_{v in S} j_v  <=  (1/q) * sum_{v infinite} j_v + (1 - 1/q) h(j_phi).
// The verdict is equivalent to mu(phi, 0, a_gen) >= 1/q; both sides are
// computed independently and cross-checked.
struct AdelicReport {
  bool holds = false;
  std::vector<Place> S;  // infinite place + S_phi(a), sorted
  Rat lhs, rhs;
};
AdelicReport adelic_check(const DrinfeldModule& phi, const PolyA& a_gen);

}  // namespace djulia
