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
#include "djulia/localfield.hpp"
#include "djulia/parse.hpp"
#include "djulia/roots.hpp"
#include "doctest.h"

using namespace djulia;

TEST_CASE("geometric series expansion of 1/(1+t) at the place t") {
  const FqCtx* F = fq_context(2);
  LocalContext C(Place::finite(PolyA::gen(F)));
  RatFunc one = RatFunc::one(F);
  LaurentSeries x = C.embed(one / (one + RatFunc::gen(F)), 20);
  CHECK(x.val() == 0);
  for (long long k = 0; k < 20; ++k) CHECK(x.digit(k).is_one());
  CHECK_THROWS_AS(x.digit(25), Error);  // beyond working precision
}

TEST_CASE("series arithmetic round-trips and tracks precision") {
  const FqCtx* F = fq_context(3);
  LocalContext C(Place::finite(PolyA::gen(F)));
  RatFunc t = RatFunc::gen(F);
  RatFunc one = RatFunc::one(F);

  LaurentSeries a = C.embed(t * t / (one + t), 15);
  CHECK(a.val() == 2);
  CHECK(a.log_abs() == Rat(-2));
  LaurentSeries b = a.inv();
  CHECK(b.val() == -2);
  CHECK((a * b - C.one(10)).val_at_least(8));
  CHECK((a + (-a)).is_zero());

  LaurentSeries c = C.embed(one + t, 12);
  CHECK(eq_to_prec(c.frobenius_power(1).truncate(10), C.embed((one + t).pow(3), 10)));
}

TEST_CASE("embedding at the infinite place uses 1/t as uniformizer") {
  const FqCtx* F = fq_context(2);
  LocalContext C(Place::infinite(F));
  RatFunc t = RatFunc::gen(F);
  RatFunc one = RatFunc::one(F);
  CHECK(C.embed(t, 10).val() == -1);          // |t| = q at infinity
  CHECK(C.embed(t * t + one, 10).val() == -2);
  CHECK(C.embed((t * t + one) / t, 10).val() == -1);
  CHECK(C.embed(one / t, 10).val() == 1);
  CHECK(C.embed(t, 10).log_abs() == Rat(1));
}

TEST_CASE("residue field of a degree-2 place") {
  const FqCtx* F = fq_context(2);
  PolyA t = PolyA::gen(F);
  PolyA prime = t * t + t + PolyA::one(F);
  LocalContext C(Place::finite(prime));
  CHECK(C.deg() == 2);
  CHECK(C.residue_order() == 4);

  // t generates the residue field: its residue satisfies x^2 + x + 1 = 0.
  LaurentSeries x = C.embed(RatFunc::gen(F), 8);
  CHECK(x.val() == 0);
  PolyA r = x.residue();
  PolyA rsq = C.kv_reduce(r * r);
  CHECK(C.kv_reduce(rsq + r + PolyA::one(F)).is_zero());

  // the prime itself becomes the uniformizer
  LaurentSeries pi = C.embed(RatFunc(prime), 8);
  CHECK(pi.val() == 1);
}

TEST_CASE("uniformizer helpers agree with embeddings") {
  const FqCtx* F = fq_context(3);
  LocalContext C(Place::finite(PolyA::gen(F)));
  CHECK(C.pi(6).val() == 1);
  CHECK(C.prime_power(4).deg() == 4);
  CHECK(C.zero(9).is_zero());
  CHECK(C.one(9).val() == 0);
  LaurentSeries z = C.zero(9);
  CHECK_THROWS_AS(z.val(), Error);  // valuation of 0 is undefined
}

TEST_CASE("Carlitz kernel at the place t: roots are 0 and t exactly") {
  const FqCtx* F = fq_context(2);
  LocalContext C(Place::finite(PolyA::gen(F)));
  RatFunc t = RatFunc::gen(F);

  LocalAdditivePoly f{&C, {}, C.zero(20), true};  // f(y) = t y + y^2
  f.a.push_back(C.embed(t, 20));
  f.a.push_back(C.one(20));

  RootReport rep = isolate_roots(f, 12);
  CHECK(rep.complete);
  bool found_t = false;
  for (const LaurentSeries& r : rep.roots) {
    if (r.is_zero()) continue;
    CHECK(r.val() == 1);
    CHECK(eq_to_prec(r, C.embed(t, 12)));
    found_t = true;
  }
  CHECK(found_t);
}

TEST_CASE("fractional-slope kernels have no rational roots") {
  // f(y) = t y + y^2 + t^{-1} y^4: slopes between exponents 2 and 4 are
  // fractional, so the only rational roots are y = 0 and the slope-1 root.
  const FqCtx* F = fq_context(2);
  LocalContext C(Place::finite(PolyA::gen(F)));
  RatFunc t = RatFunc::gen(F);
  RatFunc one = RatFunc::one(F);

  LocalAdditivePoly f{&C, {}, C.zero(24), true};
  f.a.push_back(C.embed(t, 24));
  f.a.push_back(C.one(24));
  f.a.push_back(C.embed(one / t, 24));

  RootReport rep = isolate_roots(f, 10);
  CHECK(rep.complete);
  long long nonzero = 0;
  for (const LaurentSeries& r : rep.roots)
    if (!r.is_zero()) {
      ++nonzero;
      CHECK(r.val() == 1);
    }
  CHECK(nonzero == 1);
}

TEST_CASE("hensel lifting refines a simple residual root") {
  // f(y) = y^3 - y - t over F_3((t)): residue equation y^3 - y = 0 has the
  // simple root y = 0?  No: y^3 - y has triple structure; use y + 1 seeds.
  // Instead take f(y) = y^3 + y - t: residual y(y^2+1), root y=0 simple.
  const FqCtx* F = fq_context(3);
  LocalContext C(Place::finite(PolyA::gen(F)));
  RatFunc t = RatFunc::gen(F);

  LocalAdditivePoly f{&C, {}, -C.embed(t, 24), false};  // f(y) = y + y^3 - t
  f.a.push_back(C.one(24));
  f.a.push_back(C.one(24));

  LaurentSeries y = hensel_lift(f, C.zero(24), 16);
  CHECK(f.eval(y).val_at_least(16));
  CHECK(y.val() == 1);  // y = t - t^3 + ...
  CHECK(y.digit(1).is_one());
}

TEST_CASE("eval matches explicit additive evaluation") {
  const FqCtx* F = fq_context(3);
  LocalContext C(Place::finite(PolyA::gen(F)));
  RatFunc t = RatFunc::gen(F);

  LocalAdditivePoly f{&C, {}, C.zero(20), true};
  f.a.push_back(C.embed(t, 20));
  f.a.push_back(C.embed(t + RatFunc::one(F), 20));

  LaurentSeries x = C.embed(t * t + t, 20);
  LaurentSeries direct =
      f.a[0] * x + f.a[1] * x.frobenius_power(1);
  CHECK(eq_to_prec(f.eval(x).truncate(15), direct.truncate(15)));
}
