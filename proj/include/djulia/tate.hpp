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

#ifndef DJULIA_TATE_HPP
#define DJULIA_TATE_HPP

#include <optional>
#include <vector>

#include "djulia/localdyn.hpp"

namespace djulia {

// A psi-lattice at one place: psi has good reduction there and every
// generator lies outside the unit disk, so A-linear combinations
// sum psi_{a_i}(omega_i) are discrete.  Generators are embedded into the
// completion at construction; ranks s <= 2 are supported.
class TateLattice {
 public:
  TateLattice(DrinfeldModule psi, Place v, std::vector<RatFunc> gens,
              long long prec = 96);

  const DrinfeldModule& psi() const { return lm_.module(); }
  const Place& place() const { return lm_.invariants().v; }
  const LocalContext& context() const { return lm_.context(); }
  const LocalModule& local_module() const { return lm_; }
  const std::vector<LaurentSeries>& generators() const { return gens_; }
  int rank() const { return static_cast<int>(gens_.size()); }  // s
  int stable_rank() const { return lm_.module().rank(); }      // r_1
  long long working_prec() const { return prec_; }

  // psi_b evaluated at x on this lattice's context (b = 0 gives 0).
  LaurentSeries psi_image(const PolyA& b, const LaurentSeries& x) const;
  // sum_i psi_{b[i]}(omega_i); b must have one entry per generator.
  LaurentSeries combination(const std::vector<PolyA>& b) const;

 private:
  TateLattice(LocalModule lm, std::vector<LaurentSeries> gens, long long prec)
      : lm_(std::move(lm)), gens_(std::move(gens)), prec_(prec) {}

  LocalModule lm_;
  std::vector<LaurentSeries> gens_;
  long long prec_;

  friend TateLattice lattice_reduce(const TateLattice&, int);
};

// Successive-minima basis: greedily replaces the generators by minimal
// elements of the enumerated lattice (combinations with deg a_i <= budget),
// then verifies the max formula
//   log|sum psi_{a_i}(omega_i)| = max_i q^{r_1 deg a_i} log|omega_i|
// exhaustively for deg a_i <= min(2, budget); BudgetExceeded when the
// enumeration cannot certify a reduced basis.
TateLattice lattice_reduce(const TateLattice& lat, int budget_deg = 2);

// e(x) = sum e_i x^{q^i} with e_0 = 1, the truncated lattice exponential.
struct AdditivePowerSeries {
  std::vector<LaurentSeries> e;
  LaurentSeries eval(const LaurentSeries& x) const;
};

// Truncation of e_Lambda(x) = x prod(1 - x/omega) at exponent q^n: the
// product over the finite subspace W of all lattice elements up to a greedy
// radius (at least everything of degree <= 2, and enough for q^n).  Each
// coefficient carries the absolute precision (q-1)(V-1) + q^i - 1, where V
// is the valuation of the smallest omitted element — the certified distance
// to the full-lattice coefficient.  Requires a reduced lattice.
AdditivePowerSeries exp_lattice(const TateLattice& lat, int n);

// phi_T of rank r_1 + s solved coefficient-by-coefficient from
// e(psi_T(x)) = phi_T(e(x)); the remaining functional-equation residuals up
// to exponent q^n vanish to residual_prec.
struct UniformizedModule {
  std::vector<LaurentSeries> coeffs;  // c_0 .. c_r of phi_T (c_0 = t)
  AdditivePowerSeries exp;
  int r1 = 0, s = 0;
  long long residual_prec = 0;
};
UniformizedModule uniformize(const TateLattice& lat, int n);

// a-division classes of the lattice: for each tag (b_1..b_s) in (A/a)^s a
// representative x with psi_a(x) = sum psi_{b_i}(omega_i), when one exists
// in L_v; under the exponential these classes are exactly the a-torsion of
// the component module of the uniformized phi.
struct DivisionClass {
  std::vector<PolyA> tag;
  bool rational = false;
  std::optional<LaurentSeries> rep;
};
std::vector<DivisionClass> division_points(const TateLattice& lat,
                                           const PolyA& a,
                                           long long prec = 32);

}  // namespace djulia

#endif  // DJULIA_TATE_HPP
