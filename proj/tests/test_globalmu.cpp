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
#include <random>
#include <set>

#include "djulia/errors.hpp"
#include "djulia/family.hpp"
#include "djulia/globalmu.hpp"
#include "djulia/torsion.hpp"
#include "doctest.h"

using namespace djulia;

namespace {

DrinfeldModule carlitz(const FqCtx* F) {
  return DrinfeldModule(F, {RatFunc::one(F)});
}

// Independent brute-force mu: maximize over every subset S of the bad
// places with #S <= N, recomputing both sums from the per-place table.
Rat brute_mu(const DrinfeldModule& phi, long long N, const PolyA& a_gen) {
  std::vector<std::pair<Place, Rat>> table = per_place_j(phi);
  std::vector<Place> S_a = S_of_ideal(phi, a_gen);
  std::vector<Place> bad;  // finite places with j_v > 0
  for (const auto& [v, j] : table)
    if (v.is_finite() && j > Rat(0)) bad.push_back(v);

  Rat best(0);
  size_t n = bad.size();
  REQUIRE(n <= 16);
  for (size_t mask = 0; mask < (1u << n); ++mask) {
    if (static_cast<long long>(__builtin_popcount(mask)) > N) continue;
    auto excluded = [&](const Place& v) {
      for (size_t i = 0; i < n; ++i)
        if ((mask >> i) & 1u && bad[i] == v) return true;
      return false;
    };
    Rat num(0), den(0);
    for (const auto& [v, j] : table) {
      if (excluded(v)) continue;
      den += j;
      bool in_sa = std::find(S_a.begin(), S_a.end(), v) != S_a.end();
      if (!in_sa) num += j;
    }
    Rat val = den == Rat(0) ? Rat(1) : num / den;
    if (val > best) best = val;
  }
  return best;
}

}  // namespace

TEST_CASE("per-place j of the Carlitz module vanishes everywhere") {
  const FqCtx* F = fq_context(2);
  DrinfeldModule phi = carlitz(F);
  for (const auto& [v, j] : per_place_j(phi)) {
    (void)v;
    CHECK(j == Rat(0));
  }
  CHECK(S_of_ideal(phi, PolyA::gen(F)).empty());
  MuResult m = mu(phi, 0, PolyA::gen(F));
  CHECK(m.mu == Rat(1));  // empty denominator counts as 1
  CHECK(m.S_bad.empty());
  CHECK(m.witness_S.empty());
}

TEST_CASE("a module bad only at infinity has mu = 1") {
  const FqCtx* F = fq_context(2);
  RatFunc t = RatFunc::gen(F);
  DrinfeldModule phi(F, {t, RatFunc::one(F)});  // j = [t : 1], h = 1
  MuResult m = mu(phi, 0, PolyA::gen(F));
  CHECK(m.mu == Rat(1));
  REQUIRE(m.S_bad.size() == 1);
  CHECK(m.S_bad[0].is_infinite());
  CHECK(m.S_a.empty());

  Rat total(0);
  for (const auto& [v, j] : m.per_place_j) {
    (void)v;
    total += j;
  }
  CHECK(total == phi.j_height());
  CHECK(total == Rat(1));
}

TEST_CASE("greedy mu equals brute-force subset maximization") {
  std::mt19937 rng(7);
  int checked = 0;
  while (checked < 30) {
    const int qs[2] = {2, 3};
    const FqCtx* F = fq_context(qs[rng() % 2]);
    int r = 1 + static_cast<int>(rng() % 2);
    std::vector<RatFunc> coeffs;
    for (int i = 1; i <= r; ++i) {
      std::vector<FqElem> digits;
      int len = 1 + static_cast<int>(rng() % 4);
      for (int k = 0; k < len; ++k)
        digits.emplace_back(F, static_cast<int>(rng() % F->q));
      RatFunc c = RatFunc(PolyA(F, digits));
      if (!c.is_zero() && rng() % 2 == 0)
        c = c / RatFunc(monic_from_code(F, 1, static_cast<long long>(
                                                   rng() % F->q)));
      coeffs.push_back(c);
    }
    if (coeffs.back().is_zero()) coeffs.back() = RatFunc::one(F);
    DrinfeldModule phi(F, coeffs);
    PolyA T = PolyA::gen(F);
    for (long long N : {0, 1, 2}) {
      MuResult m = mu(phi, N, T);
      CHECK(m.mu == brute_mu(phi, N, T));
      CHECK(m.mu >= Rat(0));
      CHECK(m.mu <= Rat(1));
      CHECK(static_cast<long long>(m.witness_S.size()) <= N);
    }
    // monotone in N
    CHECK(mu(phi, 1, T).mu >= mu(phi, 0, T).mu);
    ++checked;
  }
}

TEST_CASE("torsion bound closed forms") {
  const FqCtx* F2 = fq_context(2);
  PolyA T = PolyA::gen(F2);
  CHECK(torsion_bound(1, 0, T) == mpz_class(32));       // q * q^4
  CHECK(torsion_bound(2, 0, T) == mpz_class(4) * mpz_class(65536));
  CHECK(torsion_bound(1, 1, T) == mpz_class(2) * mpz_class(256));
  const FqCtx* F5 = fq_context(5);
  CHECK(torsion_bound(1, 0, PolyA::gen(F5)) == mpz_class(5) * mpz_class(625));
}

TEST_CASE("adelic check agrees with mu on hand-built modules") {
  const FqCtx* F = fq_context(2);
  RatFunc t = RatFunc::gen(F);
  RatFunc one = RatFunc::one(F);
  PolyA T = PolyA::gen(F);
  for (const DrinfeldModule& phi :
       {carlitz(F), DrinfeldModule(F, {t, one}),
        DrinfeldModule(F, {one / t, one}),
        DrinfeldModule(F, {one / (t + one), t})}) {
    AdelicReport rep = adelic_check(phi, T);
    MuResult m = mu(phi, 0, T);
    CHECK(rep.holds == (m.mu >= Rat(1, 2)));
    CHECK(rep.lhs >= Rat(0));
    if (!rep.S.empty()) CHECK(rep.S[0].is_infinite());
    CHECK(std::is_sorted(rep.S.begin(), rep.S.end()));
  }
}

TEST_CASE("family parsing and specialization") {
  FamilySpec spec = parse_family_text(
      "# twists of the Carlitz module\n"
      "q = 2\n"
      "rank = 1\n"
      "param = beta\n"
      "coeffs = [beta]\n");
  CHECK(spec.F->q == 2);
  CHECK(spec.rank() == 1);
  CHECK(spec.param == "beta");
  CHECK_THROWS_AS(parse_family_text("q = 2\ncoeffs = []\n"), Error);
}

TEST_CASE("scanning the twist family of the Carlitz module") {
  FamilySpec spec = parse_family_text(
      "q = 2\nrank = 1\nparam = beta\ncoeffs = [beta]\n");
  const FqCtx* F = spec.F;
  PolyA T = PolyA::gen(F);
  FamilyScan scan = family_scan(spec, 1, 0, T, 1);

  // P^1(L) of height <= 1 over F_2: 0, 1, t, t+1, 1/t, 1/(t+1), t/(t+1),
  // (t+1)/t, and infinity
  REQUIRE(scan.fibres.size() == 9);
  CHECK(scan.valid_fibres == 7);  // beta = 0 and beta = inf degenerate

  for (const FibreResult& f : scan.fibres) {
    if (!f.valid) {
      CHECK((f.beta == "0" || f.beta == "inf"));
      continue;
    }
    // every valid fibre is a twist of the Carlitz module: j = 0, mu = 1,
    // and the rational torsion has the same size 4 as the Carlitz torsion
    CHECK(f.h_j == Rat(0));
    CHECK(f.mu_val == Rat(1));
    CHECK(!f.torsion_lower_bound_only);
    CHECK(f.torsion_found == mpz_class(4));
    CHECK(f.torsion_found <= f.bound);
  }
  CHECK(scan.min_mu == Rat(1));
  CHECK(scan.max_torsion == mpz_class(4));

  // determinism across parallelism levels
  FamilyScan scan4 = family_scan(spec, 1, 0, T, 4);
  REQUIRE(scan4.fibres.size() == scan.fibres.size());
  for (size_t i = 0; i < scan.fibres.size(); ++i) {
    CHECK(scan4.fibres[i].beta == scan.fibres[i].beta);
    CHECK(scan4.fibres[i].valid == scan.fibres[i].valid);
    CHECK(scan4.fibres[i].torsion_found == scan.fibres[i].torsion_found);
    CHECK(scan4.fibres[i].mu_val == scan.fibres[i].mu_val);
  }

  // the CSV table is stable: header, nine fibre rows, summary row
  std::vector<CsvRow> rows = family_table(scan);
  CHECK(rows.size() == 11);
  CHECK(rows[0][0] == "beta");
}
