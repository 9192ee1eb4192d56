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

#include "djulia/globalmu.hpp"

#include <algorithm>
#include <set>

namespace djulia {

std::vector<std::pair<Place, Rat>> per_place_j(const DrinfeldModule& phi) {
  const FqCtx* F = phi.field();
  std::vector<RatFunc> coeffs;
  coeffs.reserve(static_cast<size_t>(phi.rank()) + 1);
  for (int i = 0; i <= phi.rank(); ++i) coeffs.push_back(phi.coeff(i));

  // j_v depends only on v(a_1), ..., v(a_r), so it vanishes wherever all of
  // them are units; the support of the coefficients plus infinity is enough.
  std::set<Place> cand;
  cand.insert(Place::infinite(F));
  for (int i = 1; i <= phi.rank(); ++i) {
    if (phi.coeff(i).is_zero()) continue;
    for (const Place& v : support(phi.coeff(i))) cand.insert(v);
  }

  std::vector<std::pair<Place, Rat>> out;
  out.reserve(cand.size());
  for (const Place& v : cand)
    out.emplace_back(v, local_invariants(v, coeffs).j_v);
  return out;
}

std::vector<Place> bad_places(const DrinfeldModule& phi) {
  std::vector<Place> out;
  for (const auto& [v, j] : per_place_j(phi))
    if (j > Rat(0)) out.push_back(v);
  return out;
}

std::vector<Place> S_of_ideal(const DrinfeldModule& phi, const PolyA& a_gen) {
  require(!a_gen.is_zero(), Err::ZeroArgument, "ideal generator is zero");
  std::vector<Place> out;
  for (const Place& v : bad_places(phi)) {
    if (v.is_infinite()) continue;
    LocalModule lm(phi, v);
    LocalModule::ComponentModule M = lm.component_module();
    require(M.complete, Err::IncompleteComponentData,
            "component module at " + v.str() + " exceeded its degree budget");
    if (!(a_gen % M.annihilator).is_zero()) out.push_back(v);
  }
  return out;
}

MuResult mu(const DrinfeldModule& phi, long long N, const PolyA& a_gen) {
  require(N >= 0, Err::NTooSmall, "N must be nonnegative");
  MuResult R;
  R.per_place_j = per_place_j(phi);

  Rat total(0), j_fin(0);
  for (const auto& [v, j] : R.per_place_j) {
    total += j;
    if (v.is_finite()) j_fin += j;
    if (j > Rat(0)) R.S_bad.push_back(v);
  }
  require(total == phi.j_height(), Err::InvariantViolation,
          "local j-invariants do not sum to the j-height");

  R.S_a = S_of_ideal(phi, a_gen);
  std::set<Place> in_sa(R.S_a.begin(), R.S_a.end());
  Rat j_sa(0);
  std::vector<std::pair<Rat, Place>> sa_by_j;
  for (const auto& [v, j] : R.per_place_j) {
    if (!in_sa.count(v)) continue;
    j_sa += j;
    sa_by_j.emplace_back(j, v);
  }

  long long bad_finite = 0;
  for (const Place& v : R.S_bad)
    if (v.is_finite()) ++bad_finite;

  if (j_fin.is_zero()) {  // empty denominator already at S = {}
    R.mu = Rat(1);
    return R;
  }
  if (bad_finite <= N) {  // excluding every finite bad place empties it
    for (const Place& v : R.S_bad)
      if (v.is_finite()) R.witness_S.push_back(v);
    R.mu = Rat(1);
    return R;
  }

  // Greedy optimum: drop the largest j_v members of S_phi(a).
  std::sort(sa_by_j.begin(), sa_by_j.end(),
            [](const auto& a, const auto& b) {
              if (a.first != b.first) return b.first < a.first;
              return a.second < b.second;
            });
  size_t k = std::min<size_t>(static_cast<size_t>(N), sa_by_j.size());
  Rat dropped(0);
  for (size_t i = 0; i < k; ++i) {
    dropped += sa_by_j[i].first;
    R.witness_S.push_back(sa_by_j[i].second);
  }
  std::sort(R.witness_S.begin(), R.witness_S.end());
  R.mu = (j_fin - j_sa) / (j_fin - dropped);
  require(Rat(0) <= R.mu && R.mu <= Rat(1), Err::InvariantViolation,
          "mu outside [0, 1]");
  return R;
}

mpz_class torsion_bound(int r, long long N, const PolyA& a_gen, int num_gens,
                        int deg_T) {
  require(r >= 1, Err::ZeroArgument, "rank must be positive");
  require(N >= 0, Err::NTooSmall, "N must be nonnegative");
  require(!a_gen.is_zero(), Err::ZeroArgument, "ideal generator is zero");
  require(num_gens >= 1 && deg_T >= 1, Err::ZeroArgument,
          "generator data must be positive");
  unsigned long q = static_cast<unsigned long>(a_gen.context()->q);
  mpz_class norm_pow, tower_pow;
  // Norm(a)^r = q^(r deg a).
  mpz_ui_pow_ui(norm_pow.get_mpz_t(), q,
                static_cast<unsigned long>(r) *
                    static_cast<unsigned long>(a_gen.deg()));
  unsigned long e = 4ul * static_cast<unsigned long>(r) *
                    static_cast<unsigned long>(r) *
                    static_cast<unsigned long>(num_gens * deg_T + N);
  mpz_ui_pow_ui(tower_pow.get_mpz_t(), q, e);
  return norm_pow * tower_pow;
}

AdelicReport adelic_check(const DrinfeldModule& phi, const PolyA& a_gen) {
  MuResult m0 = mu(phi, 0, a_gen);
  Rat j_inf(0), j_sa(0);
  std::set<Place> in_sa(m0.S_a.begin(), m0.S_a.end());
  for (const auto& [v, j] : m0.per_place_j) {
    if (v.is_infinite()) j_inf += j;
    if (in_sa.count(v)) j_sa += j;
  }

  AdelicReport rep;
  rep.S.push_back(Place::infinite(phi.field()));
  rep.S.insert(rep.S.end(), m0.S_a.begin(), m0.S_a.end());
  std::sort(rep.S.begin(), rep.S.end());
  Rat inv_q = Rat(1, phi.field()->q);
  rep.lhs = j_inf + j_sa;
  rep.rhs = inv_q * j_inf + (Rat(1) - inv_q) * phi.j_height();
  rep.holds = rep.lhs <= rep.rhs;
  require(rep.holds == (m0.mu >= inv_q), Err::InvariantViolation,
          "adelic restatement disagrees with mu >= 1/q");
  return rep;
}

}  // namespace djulia
