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

#include "djulia/errors.hpp"
#include "djulia/parse.hpp"
#include "djulia/tate.hpp"
#include "doctest.h"

using namespace djulia;

namespace {
DrinfeldModule carlitz(const FqCtx* F) {
  return DrinfeldModule(F, {RatFunc::one(F)});
}
}  // namespace

TEST_CASE("lattice images realize the Carlitz action on generators") {
  const FqCtx* F = fq_context(2);
  Place v = Place::finite(PolyA::gen(F));
  RatFunc t = RatFunc::gen(F);
  TateLattice lat(carlitz(F), v, {RatFunc::one(F) / t}, 64);

  CHECK(lat.rank() == 1);
  CHECK(lat.stable_rank() == 1);
  REQUIRE(lat.generators().size() == 1);
  CHECK(lat.generators()[0].val() == -1);

  // psi_T(1/t) = t (1/t) + (1/t)^2 = 1 + t^{-2}: valuation -2
  LaurentSeries img = lat.combination({PolyA::gen(F)});
  CHECK(img.val() == -2);
  // psi_{T^2}(omega) has valuation q^2 * val(omega)
  PolyA T = PolyA::gen(F);
  CHECK(lat.combination({T * T}).val() == -4);
}

TEST_CASE("lattice reduction verifies the max formula on a rank-2 lattice") {
  const FqCtx* F = fq_context(2);
  Place v = Place::finite(PolyA::gen(F));
  RatFunc t = RatFunc::gen(F);
  RatFunc one = RatFunc::one(F);

  TateLattice lat(carlitz(F), v, {one / t, (t + one) / (t * t * t)}, 64);
  TateLattice red = lattice_reduce(lat, 2);
  REQUIRE(red.rank() == 2);
  // reduced generators keep distinct valuations in strictly deeper order
  long long v0 = red.generators()[0].val();
  long long v1 = red.generators()[1].val();
  CHECK(v0 >= v1);

  // the defining property: |psi_b1(w1) + psi_b2(w2)| = max of the parts
  PolyA T = PolyA::gen(F);
  LaurentSeries z = red.combination({T, PolyA::one(F)});
  long long expect =
      std::max(2 * (-v0) /* q^deg T * log|w1| */, -v1);
  CHECK(-z.val() == expect);
}

TEST_CASE("lattices require discreteness") {
  const FqCtx* F = fq_context(2);
  Place v = Place::finite(PolyA::gen(F));
  RatFunc t = RatFunc::gen(F);
  // a generator inside the closed unit disk is not a lattice for psi
  CHECK_THROWS_AS(TateLattice(carlitz(F), v, {t}, 64), Error);
}

TEST_CASE("the truncated exponential kills the truncated lattice") {
  const FqCtx* F = fq_context(2);
  Place v = Place::finite(PolyA::gen(F));
  RatFunc t = RatFunc::gen(F);
  TateLattice lat(carlitz(F), v, {RatFunc::one(F) / t}, 96);
  TateLattice red = lattice_reduce(lat, 2);

  AdditivePowerSeries e = exp_lattice(red, 2);
  // e vanishes on psi_b(omega) for deg b < 2 by construction
  for (const char* bs : {"1", "T", "T+1"}) {
    PolyA b = parse_monic_poly(F, bs);
    LaurentSeries pt = red.combination({b});
    LaurentSeries img = e.eval(pt);
    CHECK((img.is_zero() || img.val() >= 20));
  }
  // but e is injective near zero: e(x) = x + higher terms
  LaurentSeries small = red.context().embed(t * t, 40);
  CHECK(e.eval(small).val() == small.val());
}

TEST_CASE("uniformization satisfies the functional equation") {
  const FqCtx* F = fq_context(2);
  Place v = Place::finite(PolyA::gen(F));
  RatFunc t = RatFunc::gen(F);
  TateLattice lat(carlitz(F), v, {RatFunc::one(F) / t}, 96);
  TateLattice red = lattice_reduce(lat, 2);
  UniformizedModule u = uniformize(red, 2);

  CHECK(u.r1 == 1);
  CHECK(u.s == 1);
  REQUIRE(u.coeffs.size() == 3);  // c_0, c_1, c_2 for the rank-2 module
  CHECK(eq_to_prec(u.coeffs[0].truncate(8), red.context().embed(t, 8)));
  CHECK(u.residual_prec > 0);

  // e(psi_T(x)) = phihat_T(e(x)) to the residual precision
  LaurentSeries x0 = red.context().embed(t + RatFunc::one(F), 80);
  LaurentSeries psi_tx = red.psi_image(PolyA::gen(F), x0);
  LaurentSeries lhs = u.exp.eval(psi_tx);
  LaurentSeries ex = u.exp.eval(x0);
  LaurentSeries rhs = u.coeffs[0] * ex + u.coeffs[1] * ex.frobenius_power(1) +
                      u.coeffs[2] * ex.frobenius_power(2);
  CHECK((lhs - rhs).val_at_least(std::min<long long>(u.residual_prec, 12)));
}

TEST_CASE("division points: tags, rationality, and verified representatives") {
  const FqCtx* F = fq_context(2);
  Place v = Place::finite(PolyA::gen(F));
  TateLattice lat(carlitz(F), v, {RatFunc::one(F) / RatFunc::gen(F)}, 96);
  TateLattice red = lattice_reduce(lat, 2);
  PolyA T = PolyA::gen(F);

  std::vector<DivisionClass> classes = division_points(red, T, 48);
  REQUIRE(classes.size() == 2);  // tags 0 and 1 in (A/T)^1

  bool zero_tag_seen = false;
  for (const DivisionClass& dc : classes) {
    REQUIRE(dc.tag.size() == 1);
    if (dc.tag[0].is_zero()) {
      zero_tag_seen = true;
      CHECK(dc.rational);  // 0 itself represents the zero tag
    }
    if (dc.rational) {
      REQUIRE(dc.rep.has_value());
      // verify: psi_T(rep) - psi_{tag}(omega) lies deep in the lattice scale
      LaurentSeries lhs = red.psi_image(T, *dc.rep);
      LaurentSeries rhs = dc.tag[0].is_zero()
                              ? red.context().zero(40)
                              : red.combination({dc.tag[0]});
      CHECK((lhs - rhs).val_at_least(20));
    }
  }
  CHECK(zero_tag_seen);
}

TEST_CASE("division rationality reflects the Artin-Schreier obstruction") {
  // omega = 1/t^2: the nonzero T-tag needs x^2 + tx = t^{-2}, whose digit
  // tower ends at a fractional slope; only the zero tag is rational.
  const FqCtx* F = fq_context(2);
  Place v = Place::finite(PolyA::gen(F));
  RatFunc t = RatFunc::gen(F);
  TateLattice lat(carlitz(F), v, {RatFunc::one(F) / (t * t)}, 96);
  TateLattice red = lattice_reduce(lat, 2);

  std::vector<DivisionClass> classes =
      division_points(red, PolyA::gen(F), 48);
  long long rational = 0;
  for (const DivisionClass& dc : classes)
    if (dc.rational) ++rational;
  CHECK(rational == 1);
}
