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

#include <algorithm>

#include "djulia/errors.hpp"
#include "djulia/localdyn.hpp"
#include "djulia/torsion.hpp"
#include "doctest.h"

using namespace djulia;

namespace {
DrinfeldModule carlitz(const FqCtx* F) {
  return DrinfeldModule(F, {RatFunc::one(F)});
}
}  // namespace

TEST_CASE("invariants of tx + tx^3 + tx^9 over F_3 at both bad candidates") {
  const FqCtx* F = fq_context(3);
  RatFunc t = RatFunc::gen(F);
  DrinfeldModule phi(F, {t, t});

  // at (t): v(a_i) = (1, 1, 1); m = min(1/2, 1/8) = 1/8 at i = 2: good
  LocalInvariants at_t =
      local_invariants(Place::finite(PolyA::gen(F)), {t, t, t});
  CHECK(at_t.m == Rat(1, 8));
  CHECK(at_t.r1 == 2);
  CHECK(at_t.s == 0);
  CHECK(at_t.j_v == Rat(0));
  CHECK(at_t.c_v == Rat(1, 8));

  // at infinity: v(a_i) = (-1, -1, -1); m = -1/2 at i = 1: stable rank 1
  LocalInvariants at_inf = local_invariants(Place::infinite(F), {t, t, t});
  CHECK(at_inf.m == Rat(-1, 2));
  CHECK(at_inf.r1 == 1);
  CHECK(at_inf.s == 1);
  CHECK(at_inf.j_v == Rat(3, 8));
  CHECK(at_inf.rho == Rat(-1, 2));

  // the height identity for this module: only infinity contributes
  CHECK(phi.j_height() == Rat(3, 8));
}

TEST_CASE("invariants from valuations match invariants from coefficients") {
  const FqCtx* F = fq_context(2);
  RatFunc t = RatFunc::gen(F);
  RatFunc one = RatFunc::one(F);
  Place v = Place::finite(PolyA::gen(F));
  LocalInvariants a = local_invariants(v, {t, one / t, one});
  LocalInvariants b = local_invariants_from_valuations(v, {1, -1, 0});
  CHECK(a.m == b.m);
  CHECK(a.j_v == b.j_v);
  CHECK(a.r1 == b.r1);
  CHECK(a.c_v == b.c_v);
  CHECK(a.nu_rho == b.nu_rho);
  CHECK(a.j_v == Rat(1));  // d (0/3 + 1)
  CHECK(a.s == 1);
}

TEST_CASE("zero middle coefficients are handled via LLONG_MAX sentinels") {
  const FqCtx* F = fq_context(2);
  RatFunc t = RatFunc::gen(F);
  DrinfeldModule phi(F, {RatFunc::zero(F), t});  // phi_T = tx + t x^4
  LocalModule lm(phi, Place::finite(PolyA::gen(F)));
  CHECK(lm.invariants().coeff_val[1] == LLONG_MAX);
  CHECK(lm.invariants().m == Rat(1, 3));
  CHECK(lm.good_reduction());
}

TEST_CASE("julia membership: torsion is contained, small valuations escape") {
  const FqCtx* F = fq_context(2);
  DrinfeldModule phi = carlitz(F);
  LocalModule lm(phi, Place::finite(PolyA::gen(F)));
  RatFunc t = RatFunc::gen(F);

  LocalModule::JuliaResult in = lm.julia_contains(t);
  CHECK(in.decided);
  CHECK(in.contained);
  CHECK(in.witness.is_monic());

  LocalModule::JuliaResult out = lm.julia_contains(RatFunc::one(F) / t);
  CHECK(out.decided);
  CHECK(!out.contained);
  CHECK(out.escape_step >= 0);
}

TEST_CASE("height decomposition: lambda = bounded + excess") {
  const FqCtx* F = fq_context(2);
  DrinfeldModule phi = carlitz(F);
  LocalModule lm(phi, Place::finite(PolyA::gen(F)));
  RatFunc t = RatFunc::gen(F);

  CHECK(lm.local_height(t) == Rat(1));  // v(t) d + c_v with c_v = 0
  LocalModule::HeightParts hp = lm.decompose_height(t);
  CHECK(hp.lambda == hp.bounded + hp.excess);
  CHECK(hp.lambda == Rat(1));
  CHECK(hp.excess >= Rat(0));
}

TEST_CASE("T-genericity: kernel points cancel, units do not") {
  const FqCtx* F = fq_context(2);
  DrinfeldModule phi = carlitz(F);
  LocalModule lm(phi, Place::finite(PolyA::gen(F)));
  RatFunc t = RatFunc::gen(F);
  RatFunc one = RatFunc::one(F);

  CHECK(lm.is_T_generic(RatFunc::zero(F)));  // by convention
  CHECK(lm.is_T_generic(one));               // v(phi_T(1)) = v(t+1) = 0 = trop
  CHECK(!lm.is_T_generic(t));                // phi_T(t) = 0, full cancellation
  CHECK(lm.is_generic(PolyA::gen(F), one));
}

TEST_CASE("component module under good reduction is trivial") {
  const FqCtx* F = fq_context(3);
  DrinfeldModule phi = carlitz(F);
  LocalModule lm(phi, Place::finite(PolyA::gen(F)));
  LocalModule::ComponentModule M = lm.component_module();
  CHECK(M.complete);
  CHECK(M.size_log_q == 0);
  CHECK(M.invariant_factors.empty());
  CHECK(M.annihilator.is_one());
  CHECK(lm.component_size_within_bound(M.size_log_q));
}

TEST_CASE("component counts agree with the invariant-factor assembly") {
  const FqCtx* F = fq_context(2);
  RatFunc t = RatFunc::gen(F);
  RatFunc one = RatFunc::one(F);
  DrinfeldModule phi(F, {one / t, one});  // bad at (t), j_v = 1
  LocalModule lm(phi, Place::finite(PolyA::gen(F)));
  REQUIRE(!lm.good_reduction());

  LocalModule::ComponentModule M = lm.component_module();
  REQUIRE(M.complete);
  long long total = 0;
  for (const PolyA& d : M.invariant_factors) {
    CHECK(d.is_monic());
    CHECK(!d.is_one());
    total += d.deg();
  }
  CHECK(total == M.size_log_q);
  CHECK(lm.component_size_within_bound(M.size_log_q));

  // #M[a] from the factors must match the independent root count
  for (int code = 0; code < 2; ++code) {
    PolyA a = monic_from_code(F, 1, code);
    long long e = 0;
    for (const PolyA& d : M.invariant_factors) e += gcd(a, d).deg();
    long long direct = lm.component_count(a);
    CHECK(direct == (1LL << e));
  }
}

TEST_CASE("refinement keeps a generic subgroup of certified size") {
  const FqCtx* F = fq_context(2);
  DrinfeldModule phi = carlitz(F);
  LocalModule lm(phi, Place::finite(PolyA::gen(F)));
  PolyA T = PolyA::gen(F);

  std::vector<RatFunc> X = torsion_global(phi).points;
  REQUIRE(X.size() == 4);
  LocalModule::RefineResult res = lm.refine_generic_subgroup(X, T);
  CHECK(!res.subgroup.empty());
  CHECK(res.lambda_floor == lm.lambda_floor(T));
  bool has_zero = false;
  for (const RatFunc& y : res.subgroup) {
    CHECK(std::find(X.begin(), X.end(), y) != X.end());
    if (y.is_zero()) {
      has_zero = true;
      continue;
    }
    CHECK(lm.is_T_generic(y));
    CHECK(lm.local_height(y) >= res.lambda_floor);
  }
  CHECK(has_zero);
  CHECK_THROWS_AS(
      lm.refine_generic_subgroup({RatFunc::one(F)}, T),  // not a subgroup
      Error);
}

TEST_CASE("annihilator budget covers the size bound") {
  const FqCtx* F = fq_context(2);
  RatFunc t = RatFunc::gen(F);
  DrinfeldModule phi(F, {RatFunc::one(F) / t, RatFunc::one(F)});
  LocalModule lm(phi, Place::finite(PolyA::gen(F)));
  CHECK(lm.annihilator_budget() >= 1);
  CHECK(lm.component_size_bound_exponent() >= 0);
  // the bound is monotone in the data: a budget of 0 must cut off
  LocalModule::ComponentModule cut = lm.component_module(0);
  CHECK(cut.budget_deg == 0);
}
