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

#include "djulia/elliptic.hpp"
#include "djulia/errors.hpp"
#include "doctest.h"

using namespace djulia;

namespace {
CurveRecord single(const char* label, long long p, long long d, long long c,
                   long long j, long long w = 1) {
  CurveRecord rec;
  rec.label = label;
  rec.local.push_back({p, d, c, j, w});
  return rec;
}
}  // namespace

TEST_CASE("prime log sums compare exactly across mixed primes") {
  PrimeLogSum a, b;
  a.add(2, Rat(10));  // 10 ln 2 = ln 1024
  b.add(3, Rat(6));   // 6 ln 3 = ln 729
  CHECK(PrimeLogSum::compare(a, b) == 1);
  CHECK(PrimeLogSum::compare(b, a) == -1);
  CHECK(PrimeLogSum::compare(a, a) == 0);

  PrimeLogSum c, d;  // ln 8 vs ln 8 through different prime exponents
  c.add(2, Rat(3));
  d.add(2, Rat(6, 2));
  CHECK(PrimeLogSum::compare(c, d) == 0);

  PrimeLogSum tiny, zero;  // sign decided by the exact product fallback
  tiny.add(2, Rat(1, 1000000));
  CHECK(PrimeLogSum::compare(tiny, zero) == 1);
  CHECK(PrimeLogSum::compare(zero, zero) == 0);
}

TEST_CASE("exact ratios require proportional coefficient vectors") {
  PrimeLogSum a, b;
  a.add(2, Rat(3));
  a.add(5, Rat(9, 2));
  b.add(2, Rat(2));
  b.add(5, Rat(3));
  auto r = PrimeLogSum::exact_ratio(a, b);
  REQUIRE(r.has_value());
  CHECK(*r == Rat(3, 2));

  PrimeLogSum c;  // not proportional: ratio must refuse
  c.add(2, Rat(2));
  c.add(5, Rat(4));
  CHECK(!PrimeLogSum::exact_ratio(a, c).has_value());
}

TEST_CASE("certified bracketing rounds ln3/ln2 to seven digits") {
  PrimeLogSum num, den;
  num.add(3, Rat(1));
  den.add(2, Rat(1));
  Rat r = PrimeLogSum::ratio_within_tolerance(num, den);
  CHECK(r == Rat(15849625, 10000000));  // log_2 3 = 1.5849625...
}

TEST_CASE("factorial divisibility via Legendre valuations") {
  CHECK(divides_factorial(5, 6));
  CHECK(!divides_factorial(7, 6));
  CHECK(divides_factorial(25, 10));   // 5^2 | 10!
  CHECK(!divides_factorial(25, 9));   // 9! carries a single 5
  CHECK(divides_factorial(16, 6));    // 2^4 | 720
  CHECK(divides_factorial(720, 6));
  CHECK(divides_factorial(1, 1));
}

TEST_CASE("ingestion validates structure and groups by label") {
  std::vector<CurveRecord> recs = ingest_rows(
      {{"label", "p", "ord_delta", "ord_cond", "ord_j", "weight"},
       {"a", "2", "3", "1", "-3", "1"},
       {"b", "3", "0", "0", "2", "1"},
       {"a", "5", "4", "1", "-4", "2"}});
  REQUIRE(recs.size() == 2);
  CHECK(recs[0].label == "a");
  CHECK(recs[0].local.size() == 2);  // non-consecutive rows regroup
  CHECK(recs[1].label == "b");
  CHECK(recs[0].semistable());

  // bad header
  CHECK_THROWS_AS(ingest_rows({{"label", "p", "delta"}}), Error);
  // p = 4 is not prime
  CHECK_THROWS_AS(
      ingest_rows({{"label", "p", "ord_delta", "ord_cond", "ord_j", "weight"},
                   {"x", "4", "1", "1", "-1", "1"}}),
      Error);
  // multiplicative row must satisfy ord_Delta = -ord_j
  CHECK_THROWS_AS(
      ingest_rows({{"label", "p", "ord_delta", "ord_cond", "ord_j", "weight"},
                   {"x", "2", "3", "1", "-2", "1"}}),
      Error);
}

TEST_CASE("Szpiro ratio of the conductor-11 record is exactly 5") {
  CurveRecord rec = single("11a1", 11, 5, 1, -5);
  CHECK(szpiro_ratio(rec) == Rat(5));
  CHECK(rec.semistable());
}

TEST_CASE("equal orders at two primes give ratio 1 through the exact path") {
  CurveRecord rec;
  rec.label = "x";
  rec.local.push_back({2, 1, 1, -1, 1});
  rec.local.push_back({3, 1, 1, -1, 1});
  CHECK(szpiro_ratio(rec) == Rat(1));
}

TEST_CASE("mixed-prime ratio falls back to certified bracketing") {
  // sigma = (5 ln 2 + 3 ln 3)/(ln 2 + ln 3) = 3.7737056...
  CurveRecord rec;
  rec.label = "x";
  rec.local.push_back({2, 5, 1, -5, 1});
  rec.local.push_back({3, 3, 1, -3, 1});
  CHECK(szpiro_ratio(rec) == Rat(37737056, 10000000));
}

TEST_CASE("trivial conductor is rejected") {
  CurveRecord rec = single("good", 2, 0, 0, 3);
  CHECK_THROWS_AS(szpiro_ratio(rec), Error);
}

TEST_CASE("mu_elliptic on the conductor-11 record") {
  CurveRecord rec = single("11a1", 11, 5, 1, -5);
  CHECK(mu_elliptic(rec, 0, 6) == Rat(1));  // 5 divides 6!
  CHECK(mu_elliptic(rec, 0, 4) == Rat(0));  // 5 does not divide 4!
  CHECK(mu_elliptic(rec, 1, 4) == Rat(1));  // excluding the place restores 1
}

TEST_CASE("mu_elliptic is monotone in n and in N") {
  CurveRecord rec;
  rec.label = "x";
  rec.local.push_back({2, 7, 1, -7, 1});
  rec.local.push_back({3, 5, 1, -5, 2});
  rec.local.push_back({11, 4, 1, -4, 1});
  for (long long n = 1; n < 12; ++n) {
    CHECK(mu_elliptic(rec, 0, n) <= mu_elliptic(rec, 0, n + 1));
    CHECK(mu_elliptic(rec, 0, n) <= mu_elliptic(rec, 1, n));
  }
  // a place with -ord_j = 7 alone and n = 6: nothing is killed
  CHECK(mu_elliptic(single("x", 2, 7, 1, -7), 0, 6) == Rat(0));
}

TEST_CASE("theorem check on the conductor-11 record") {
  CurveRecord rec = single("11a1", 11, 5, 1, -5);
  TheoremCheck tc = theorem_check(rec, 6);
  CHECK(tc.holds);
  CHECK(tc.lhs == Rat(1));
  CHECK(tc.rhs == Rat(1, 25));
  CHECK_THROWS_AS(theorem_check(rec, 5), Error);  // n must exceed sigma = 5

  CurveRecord additive = single("bad", 2, 4, 2, -4);
  CHECK(!additive.semistable());
  CHECK_THROWS_AS(theorem_check(additive, 9), Error);
}

TEST_CASE("theorem check across a stack of weighted multiplicative places") {
  CurveRecord rec;
  rec.label = "x";
  rec.local.push_back({2, 6, 1, -6, 3});
  rec.local.push_back({5, 2, 1, -2, 1});
  rec.local.push_back({7, 0, 0, 1, 2});  // good place, contributes nothing
  Rat sigma = szpiro_ratio(rec);
  CHECK(sigma > Rat(1));
  CHECK(sigma < Rat(6));
  TheoremCheck tc = theorem_check(rec, 7);
  CHECK(tc.holds);
  CHECK(tc.lhs >= tc.rhs);
}
