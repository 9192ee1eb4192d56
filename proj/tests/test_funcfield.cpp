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
#include <set>

#include "djulia/errors.hpp"
#include "djulia/parse.hpp"
#include "djulia/places.hpp"
#include "doctest.h"

using namespace djulia;

TEST_CASE("F_4 arithmetic through the Conway-style table") {
  const FqCtx* F = fq_context(4);
  FqElem u = FqElem::from_int(F, 2);  // a generator of F_4 over F_2
  CHECK((u * u).code() == 3);         // u^2 = u + 1
  CHECK((u * u * u).code() == 1);     // u^3 = 1
  CHECK(u.frob().code() == 3);        // Frobenius is squaring
  CHECK((u * u.inv()).code() == 1);
  CHECK((u + u).is_zero());           // characteristic 2
}

TEST_CASE("F_9 field axioms by exhaustion") {
  const FqCtx* F = fq_context(9);
  for (int a = 0; a < 9; ++a) {
    FqElem x = FqElem::from_int(F, a);
    CHECK(x.frob().frob() == x);  // x^9 = x
    if (a != 0) {
      CHECK((x * x.inv()).code() == 1);
      CHECK(x.pow(8).code() == 1);
    }
    CHECK(x.pth_root().pow(3) == x);
  }
}

TEST_CASE("monic irreducible counts match the necklace numbers") {
  const FqCtx* F2 = fq_context(2);
  const FqCtx* F3 = fq_context(3);
  CHECK(monic_irreducibles(F2, 1).size() == 2);
  CHECK(monic_irreducibles(F2, 2).size() == 1);
  CHECK(monic_irreducibles(F2, 3).size() == 2);
  CHECK(monic_irreducibles(F2, 4).size() == 3);
  CHECK(monic_irreducibles(F3, 1).size() == 3);
  CHECK(monic_irreducibles(F3, 2).size() == 3);
  CHECK(monic_irreducibles(F3, 3).size() == 8);
  for (const PolyA& f : monic_irreducibles(F3, 2)) {
    CHECK(f.deg() == 2);
    CHECK(f.lead().code() == 1);
  }
}

TEST_CASE("polynomial gcd and extended gcd") {
  const FqCtx* F = fq_context(3);
  PolyA t = PolyA::gen(F);
  PolyA a = t * t - PolyA::one(F);       // (t-1)(t+1)
  PolyA b = t * t + t;                   // t(t+1)
  PolyA g = gcd(a, b);
  CHECK(g == t + PolyA::one(F));
  auto [g2, s, u] = poly_ext_gcd(a, b);
  CHECK(g2 == g);
  CHECK(s * a + u * b == g);
}

TEST_CASE("monic_from_code enumerates distinct monic polynomials") {
  const FqCtx* F = fq_context(2);
  std::set<std::string> seen;
  for (long long c = 0; c < 4; ++c) {
    PolyA f = monic_from_code(F, 2, c);
    CHECK(f.deg() == 2);
    CHECK(f.lead().code() == 1);
    seen.insert(poly_str(f));
  }
  CHECK(seen.size() == 4);
  CHECK(monic_from_code(F, 2, 0) == PolyA::gen(F) * PolyA::gen(F));
}

TEST_CASE("rational functions reduce to lowest terms") {
  const FqCtx* F = fq_context(3);
  PolyA t = PolyA::gen(F);
  RatFunc x(t * t - PolyA::one(F), t - PolyA::one(F));
  CHECK(x.is_polynomial());
  CHECK(x == RatFunc(t + PolyA::one(F)));
  CHECK((x / x).is_one());
  CHECK((x - x).is_zero());
  RatFunc y = RatFunc::one(F) / RatFunc::gen(F);
  CHECK((y * RatFunc::gen(F)).is_one());
}

TEST_CASE("expression parser handles nesting, powers, and both t and T") {
  const FqCtx* F = fq_context(2);
  RatFunc t = RatFunc::gen(F);
  CHECK(parse_ratfunc(F, "T") == t);
  CHECK(parse_ratfunc(F, "(t+1)^2/(t^2+t+1)") ==
        (t + RatFunc::one(F)).pow(2) / (t * t + t + RatFunc::one(F)));
  CHECK(parse_ratfunc(F, "1 + t*(1+t)") == RatFunc::one(F) + t + t * t);
  CHECK_THROWS_AS(parse_ratfunc(F, "t+"), Error);
  CHECK_THROWS_AS(parse_ratfunc(F, "1/0"), Error);
}

TEST_CASE("place parsing rejects reducible and non-monic primes") {
  const FqCtx* F = fq_context(2);
  CHECK(parse_place(F, "inf").is_infinite());
  CHECK(parse_place(F, "t^2+t+1").deg() == 2);
  CHECK_THROWS_AS(parse_place(F, "t^2"), Error);       // reducible
  CHECK_THROWS_AS(parse_place(F, "t^2+1"), Error);     // (t+1)^2
  CHECK_THROWS_AS(parse_monic_poly(F, "1"), Error);    // constant
}

TEST_CASE("support, valuations, and the product formula on a worked example") {
  const FqCtx* F = fq_context(2);
  RatFunc t = RatFunc::gen(F);
  RatFunc one = RatFunc::one(F);
  RatFunc x = t * t / (t + one).pow(3);

  std::vector<Place> sup = support(x);
  REQUIRE(sup.size() == 3);
  CHECK(sup[0].is_infinite());
  CHECK(sup[1] == Place::finite(PolyA::gen(F)));
  CHECK(std::is_sorted(sup.begin(), sup.end()));

  CHECK(*valuation(x, sup[0]) == 1);  // deg den - deg num
  CHECK(*valuation(x, sup[1]) == 2);
  CHECK(*valuation(x, sup[2]) == -3);
  CHECK(!valuation(RatFunc::zero(F), sup[1]).has_value());

  CHECK(log_abs(x, sup[2]) == Rat(3));
  CHECK(height(x) == Rat(3));
  CHECK(product_formula_check(x));
}

TEST_CASE("place enumeration is sorted with infinity first") {
  const FqCtx* F = fq_context(2);
  std::vector<Place> ps = enumerate_places(F, 2);
  REQUIRE(ps.size() == 4);  // inf, t, t+1, t^2+t+1
  CHECK(ps[0].is_infinite());
  CHECK(ps[1].str() == "t");
  CHECK(ps[2].str() == "t+1");
  CHECK(ps[3].deg() == 2);
  CHECK(std::is_sorted(ps.begin(), ps.end()));
}

TEST_CASE("Northcott enumeration of small-height elements") {
  const FqCtx* F = fq_context(2);
  std::vector<RatFunc> xs = enumerate_elements(F, 1);
  CHECK(xs.size() == 8);  // 0, 1, and six height-1 elements
  for (const RatFunc& x : xs) CHECK(height(x) <= Rat(1));
  std::set<std::string> seen;
  for (const RatFunc& x : xs) seen.insert(x.str());
  CHECK(seen.size() == xs.size());
  CHECK(seen.count("0") == 1);
  CHECK(seen.count("t") == 1);
}

TEST_CASE("weighted projective points identify twisted scalings") {
  const FqCtx* F = fq_context(2);
  RatFunc t = RatFunc::gen(F);
  RatFunc lam = t + RatFunc::one(F);
  WeightedPoint p({t, RatFunc::one(F)}, {1, 3});
  WeightedPoint pscaled({t * lam, lam.pow(3)}, {1, 3});
  CHECK(p.same_point(pscaled));
  CHECK(p.height() == pscaled.height());
  CHECK(p.height() == Rat(1));
  WeightedPoint other({t * t, RatFunc::one(F)}, {1, 3});
  CHECK(!p.same_point(other));
}
