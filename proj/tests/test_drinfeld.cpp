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
#include "djulia/module.hpp"
#include "djulia/parse.hpp"
#include "djulia/torsion.hpp"
#include "doctest.h"

using namespace djulia;

namespace {
DrinfeldModule carlitz(const FqCtx* F) {
  return DrinfeldModule(F, {RatFunc::one(F)});
}
}  // namespace

TEST_CASE("phi_{T^2} composes the Carlitz action") {
  const FqCtx* F = fq_context(2);
  DrinfeldModule phi = carlitz(F);
  RatFunc t = RatFunc::gen(F);
  RatFunc one = RatFunc::one(F);

  PolyA T = PolyA::gen(F);
  TwistedPoly sq = phi.phi(T * T);
  // phi_{T^2}(x) = t^2 x + (t^2 + t) x^2 + x^4
  CHECK(sq.coeff(0) == t * t);
  CHECK(sq.coeff(1) == t * t + t);
  CHECK(sq.coeff(2) == one);

  CHECK(phi.phi_eval(T, t).is_zero());  // t is T-torsion
  CHECK(phi.phi_eval(T * T + T, one).is_zero());
  CHECK(phi.phi_eval(T, one) == t + one);
}

TEST_CASE("gamma substitutes t for T") {
  const FqCtx* F = fq_context(3);
  PolyA T = PolyA::gen(F);
  RatFunc t = RatFunc::gen(F);
  CHECK(gamma_image(T * T + T) == t * t + t);
  CHECK(gamma_image(PolyA::one(F)) == RatFunc::one(F));
}

TEST_CASE("j-invariant of rank 2 lives in weighted projective space") {
  const FqCtx* F = fq_context(2);
  RatFunc t = RatFunc::gen(F);
  DrinfeldModule phi(F, {t, RatFunc::one(F)});
  WeightedPoint j = phi.j_invariant();
  REQUIRE(j.coords().size() == 2);
  CHECK(j.weights()[0] == 1);   // q - 1
  CHECK(j.weights()[1] == 3);   // q^2 - 1
  CHECK(phi.j_height() == Rat(1));
  CHECK(carlitz(F).j_height() == Rat(0));
}

TEST_CASE("twisting preserves the j-invariant and conjugates the action") {
  const FqCtx* F = fq_context(3);
  RatFunc t = RatFunc::gen(F);
  RatFunc one = RatFunc::one(F);
  DrinfeldModule phi(F, {t, t + one});
  RatFunc alpha = one / (t + one);
  DrinfeldModule psi = phi.twist(alpha);

  CHECK(psi.j_invariant().same_point(phi.j_invariant()));
  CHECK(psi.j_height() == phi.j_height());
  CHECK(psi.twist(alpha.inv()) == phi);

  // psi_T(x) = alpha^{-1} phi_T(alpha x)
  PolyA T = PolyA::gen(F);
  RatFunc x = t * t + one;
  CHECK(psi.phi_eval(T, x) == phi.phi_eval(T, alpha * x) / alpha);
}

TEST_CASE("module parsing round-trips and validates") {
  const FqCtx* F = fq_context(2);
  DrinfeldModule phi = parse_module_text(
      "# rank-2 module\nq = 2\nrank = 2\ncoeffs = [t, 1]\n");
  CHECK(phi.field() == F);
  CHECK(phi.rank() == 2);
  CHECK(phi.coeff(1) == RatFunc::gen(F));
  CHECK_THROWS_AS(parse_module_text("q = 6\nrank = 1\ncoeffs = [1]\n"), Error);
  CHECK_THROWS_AS(parse_module_text("q = 2\nrank = 1\ncoeffs = [0]\n"), Error);
}

TEST_CASE("Carlitz torsion over F_2: phi[T] and the full rational module") {
  const FqCtx* F = fq_context(2);
  DrinfeldModule phi = carlitz(F);
  RatFunc t = RatFunc::gen(F);
  RatFunc one = RatFunc::one(F);

  std::vector<RatFunc> ker = kernel_points(phi, PolyA::gen(F));
  REQUIRE(ker.size() == 2);
  CHECK(ker[0].is_zero());
  CHECK(ker[1] == t);

  TorsionModule tm = torsion_global(phi);
  CHECK(tm.size_log_q == 2);
  REQUIRE(tm.points.size() == 4);
  CHECK(std::find(tm.points.begin(), tm.points.end(), one) != tm.points.end());
  CHECK(std::find(tm.points.begin(), tm.points.end(), t + one) !=
        tm.points.end());
  REQUIRE(tm.invariant_factors.size() == 1);
  PolyA T = PolyA::gen(F);
  CHECK(tm.invariant_factors[0] == T * T + T);
  CHECK(tm.annihilator == T * T + T);
  // the annihilator annihilates every point
  for (const RatFunc& x : tm.points)
    CHECK(phi.phi_eval(tm.annihilator, x).is_zero());
}

TEST_CASE("torsion of a twist is the scaled torsion") {
  const FqCtx* F = fq_context(2);
  RatFunc t = RatFunc::gen(F);
  DrinfeldModule phi = carlitz(F);
  DrinfeldModule psi = phi.twist(t);  // points divided by t

  TorsionModule a = torsion_global(phi);
  TorsionModule b = torsion_global(psi);
  CHECK(a.size_log_q == b.size_log_q);
  CHECK(a.annihilator == b.annihilator);
  for (const RatFunc& x : a.points)
    CHECK(std::find(b.points.begin(), b.points.end(), x / t) !=
          b.points.end());
}

TEST_CASE("good places and torsion degree bounds") {
  const FqCtx* F = fq_context(2);
  DrinfeldModule phi = carlitz(F);
  CHECK(smallest_good_place(phi).str() == "t");

  RatFunc t = RatFunc::gen(F);
  DrinfeldModule bad(F, {RatFunc::one(F) / t, RatFunc::one(F)});
  // (t) has bad reduction, so the smallest good place moves past it
  CHECK(smallest_good_place(bad).str() == "t+1");

  TorsionBounds tb = torsion_degree_bounds(phi);
  CHECK(tb.num_deg >= 1);
  CHECK(tb.den_deg >= 0);
}

TEST_CASE("Carlitz torsion over F_3 is the T-kernel") {
  const FqCtx* F = fq_context(3);
  DrinfeldModule phi = carlitz(F);
  // phi_T(x) = tx + x^3 = x(x^2 + t): x^2 = -t has no rational solution,
  // so the only rational T-torsion is 0; likewise for (T+c).
  std::vector<RatFunc> ker = kernel_points(phi, PolyA::gen(F));
  CHECK(ker.size() == 1);
  CHECK(ker[0].is_zero());

  TorsionModule tm = torsion_global(phi);
  CHECK(tm.size_log_q == 0);
  REQUIRE(tm.points.size() == 1);
  CHECK(tm.points[0].is_zero());
  CHECK(tm.invariant_factors.empty());
  CHECK(tm.annihilator.is_one());
}
