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

#ifndef DJULIA_LOCALDYN_HPP
#define DJULIA_LOCALDYN_HPP

#include <memory>
#include <string>
#include <vector>

#include "djulia/localfield.hpp"
#include "djulia/module.hpp"
#include "djulia/roots.hpp"

namespace djulia {

// Valuation data of one additive polynomial at one place.  All logarithms
// are exact rationals in units of log q.
struct LocalInvariants {
  explicit LocalInvariants(Place place) : v(std::move(place)) {}

  Place v;
  int d = 1;                         // residue degree deg(v)
  std::vector<long long> coeff_val;  // v(a_i) for i = 0..r (LLONG_MAX if a_i=0)
  Rat m;                             // min_{i>=1} v(a_i)/(q^i - 1)
  Rat c_v;                           // v(a_r) d / (q^r - 1)
  Rat j_v;                           // d (v(a_r)/(q^r - 1) - m) >= 0
  Rat rho;                           // log-radius of phi^0: d * m
  Rat B_T_log;                       // escape radius in log units
  int r1 = 0;                        // largest i attaining m
  int s = 0;                         // r - r1
  long long vj = 0;                  // ceil(j_v / d)
  long long nu_rho = 0;              // x in phi^0  <=>  v(x) >= nu_rho
  long long nu_B = 0;                // bounded orbits have v(x) >= nu_B
  std::string str() const;
};

// Invariants of the additive polynomial with coefficient vector
// (a_0, a_1, ..., a_r) at v; for a Drinfeld module a_0 = gamma(T) = t.
LocalInvariants local_invariants(const Place& v,
                                 const std::vector<RatFunc>& coeffs);

// Same invariants from the coefficient valuations alone (LLONG_MAX marks a
// zero coefficient); serves modules whose coefficients live in the
// completion rather than in L.
LocalInvariants local_invariants_from_valuations(
    const Place& v, const std::vector<long long>& coeff_val);

// A Drinfeld module studied at one place of F_q(t).
class LocalModule {
 public:
  LocalModule(DrinfeldModule phi, Place v);

  const DrinfeldModule& module() const { return phi_; }
  const LocalContext& context() const { return *C_; }
  const LocalInvariants& invariants() const { return inv_; }
  bool good_reduction() const { return inv_.j_v == Rat(0); }

  // phi_a as an additive polynomial over the completion, with coefficients
  // computed by a twisted Horner scheme directly in series arithmetic to
  // absolute precision prec; a[i] is the coefficient of x^{q^i} and w = 0.
  LocalAdditivePoly localize(const PolyA& a, long long prec) const;

  // Membership in the reduced disk phi^0 = {v(x) >= nu_rho}.
  bool in_phi0(const RatFunc& x) const;

  // Filled-Julia membership.  Escape past B_T decides "no"; otherwise the
  // orbit is trapped in a finite digit window and an F_q-linear dependence
  // of the iterates phi_{T^k}(x) modulo phi^0 produces a monic witness b
  // with phi_b(x) in phi^0.  With the default budget (-1: the window
  // dimension plus one) the answer is always decided.
  struct JuliaResult {
    bool decided = false;
    bool contained = false;
    PolyA witness;               // monic b with phi_b(x) in phi^0 (if contained)
    long long escape_step = -1;  // first k with log|phi_{T^k}(x)| > B_T
  };
  JuliaResult julia_contains(const RatFunc& x, long long budget = -1) const;

  // Local height lambda(x) = v(x) d + c_v of a nonzero point, and its
  // decomposition into the bounded part and the nonnegative excess:
  // outside phi^0 the excess is zero, inside it the bounded part is j_v.
  Rat local_height(const RatFunc& x) const;
  struct HeightParts {
    Rat lambda, bounded, excess;
  };
  HeightParts decompose_height(const RatFunc& x) const;

  // x is a-generic when v(phi_a(x)) equals the tropical value
  // min_i (v(c_i) + q^i v(x)); zero is generic by convention.
  bool is_generic(const PolyA& a, const RatFunc& x) const;
  bool is_T_generic(const RatFunc& x) const;

  // ---- component module M = F / phi^0 -----------------------------------

  // t_a = #M[a]: residue classes of phi_a^{-1}(phi^0) modulo phi^0.
  long long component_count(const PolyA& a) const;

  struct ComponentModule {
    std::vector<PolyA> invariant_factors;  // d_1 | d_2 | ... (monic), empty if M = 0
    PolyA annihilator;                     // largest factor; 1 when M = 0
    long long size_log_q = 0;              // log_q #M = sum of deg d_i
    bool complete = true;                  // false when the degree budget cut off
    long long budget_deg = 0;              // budget that was used
  };
  // budget_deg < 0 selects the derived budget (annihilator_budget()).
  ComponentModule component_module(long long budget_deg = -1) const;

  // deg f_s is at most min(d * |W|, ceil(log_q 2 + (vj s + 2s + 1)(vj + 2) s))
  // where W is the digit window [nu_B, nu_rho).
  long long annihilator_budget() const;
  // E = (vj s + 2s + 1)(vj + 2) s, the exponent in the size bound #M <= 2 q^E.
  long long component_size_bound_exponent() const;
  // Exact test q^size_log_q <= 2 q^E.
  bool component_size_within_bound(long long size_log_q) const;

  // ---- generic refinement ------------------------------------------------

  // Extracts from a finite F_q-subspace X of L a subspace Y whose nonzero
  // elements are all a-generic, with #Y >= q^(log_q #X - 4 R^2), R = r deg a.
  struct RefineResult {
    std::vector<RatFunc> subgroup;  // all elements of Y, zero included
    Rat lambda_floor;               // height floor for nonzero generic torsion
    long long size_floor_log_q = 0; // certified log_q #Y
  };
  RefineResult refine_generic_subgroup(const std::vector<RatFunc>& X,
                                       const PolyA& a) const;
  // (1 - 1/q) j_v - log+|gamma(a)^{-1}|_v / (q (q^R - 1)^2).
  Rat lambda_floor(const PolyA& a) const;

 private:
  DrinfeldModule phi_;
  std::shared_ptr<LocalContext> C_;
  LocalInvariants inv_;

  LaurentSeries iterate_step(const std::vector<LaurentSeries>& coeffs,
                             const LaurentSeries& z) const;
  long long component_count_at(const PolyA& a, long long prec) const;
};

}  // namespace djulia

#endif  // DJULIA_LOCALDYN_HPP
