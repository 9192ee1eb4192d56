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

#include "djulia/torsion.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "djulia/localdyn.hpp"
#include "djulia/roots.hpp"

namespace djulia {
namespace {

long long ilog_q(unsigned long long n, long long q, const char* what) {
  long long e = 0;
  unsigned long long v = 1;
  while (v < n) {
    v *= static_cast<unsigned long long>(q);
    ++e;
  }
  require(v == n, Err::InvariantViolation, what);
  return e;
}

// Rational reconstruction of a w-integral series known mod p^N: the unique
// n/d with deg n <= num_deg, deg d <= den_deg, p not dividing d and
// n/d = y mod p^N, provided N deg p >= num_deg + den_deg + 1 (partial
// extended Euclid on (p^N, y)); nullopt when no candidate fits the degree
// bounds.  Callers must verify the candidate exactly.
std::optional<RatFunc> reconstruct(const LocalContext& C, const LaurentSeries& y,
                                   long long N, const TorsionBounds& b) {
  const FqCtx* F = C.field();
  if (y.is_zero()) return RatFunc::zero(F);
  if (y.val() < 0) return std::nullopt;
  PolyA M = C.prime_power(N);
  PolyA r1 = (C.prime_power(y.val()) * y.unit()) % M;
  PolyA r0 = M;
  PolyA t0 = PolyA::zero(F), t1 = PolyA::one(F);
  while (r1.deg() > b.num_deg) {
    auto [quot, rem] = divmod(r0, r1);
    PolyA t2 = t0 - quot * t1;
    r0 = r1;
    r1 = rem;
    t0 = t1;
    t1 = std::move(t2);
  }
  if (t1.is_zero() || t1.deg() > b.den_deg) return std::nullopt;
  return RatFunc(r1, t1);
}

struct RatLess {
  bool operator()(const RatFunc& a, const RatFunc& b) const {
    return ratfunc_less(a, b);
  }
};

void sort_points(std::vector<RatFunc>& pts) {
  std::sort(pts.begin(), pts.end(), ratfunc_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
}

// Smith normal form over F_q[T] of a nonsingular matrix, in place; returns
// the monic diagonal d_1 | d_2 | ... | d_n.
std::vector<PolyA> smith_diagonal(std::vector<std::vector<PolyA>>& A) {
  int n = static_cast<int>(A.size());
  std::vector<PolyA> diag;
  for (int k = 0; k < n; ++k) {
    for (;;) {
      int bi = -1, bj = -1;
      for (int i = k; i < n; ++i)
        for (int j = k; j < n; ++j)
          if (!A[i][j].is_zero() &&
              (bi < 0 || A[i][j].deg() < A[bi][bj].deg())) {
            bi = i;
            bj = j;
          }
      require(bi >= 0, Err::InvariantViolation,
              "singular presentation matrix in torsion module");
      std::swap(A[bi], A[k]);
      for (int i = 0; i < n; ++i) std::swap(A[i][bj], A[i][k]);
      bool again = false;
      for (int i = k + 1; i < n; ++i) {
        if (A[i][k].is_zero()) continue;
        PolyA quot = A[i][k] / A[k][k];
        for (int j = k; j < n; ++j) A[i][j] = A[i][j] - quot * A[k][j];
        if (!A[i][k].is_zero()) again = true;
      }
      for (int j = k + 1; j < n; ++j) {
        if (A[k][j].is_zero()) continue;
        PolyA quot = A[k][j] / A[k][k];
        for (int i = k; i < n; ++i) A[i][j] = A[i][j] - quot * A[i][k];
        if (!A[k][j].is_zero()) again = true;
      }
      if (again) continue;
      for (int i = k + 1; i < n && !again; ++i)
        for (int j = k + 1; j < n && !again; ++j)
          if (!(A[i][j] % A[k][k]).is_zero()) {
            for (int c = k; c < n; ++c) A[k][c] = A[k][c] + A[i][c];
            again = true;
          }
      if (!again) break;
    }
    diag.push_back(A[k][k].monic());
  }
  return diag;
}

}  // namespace

TorsionBounds torsion_degree_bounds(const DrinfeldModule& phi) {
  std::set<Place> rel;
  std::vector<RatFunc> coeffs;
  for (int i = 0; i <= phi.rank(); ++i) {
    coeffs.push_back(phi.coeff(i));
    if (phi.coeff(i).is_zero()) continue;
    for (const Place& v : support(phi.coeff(i)))
      if (v.is_finite()) rel.insert(v);
  }
  TorsionBounds b;
  for (const Place& v : rel) {
    LocalInvariants inv = local_invariants(v, coeffs);
    b.den_deg += std::max<long long>(0, -inv.nu_B) * v.deg();
  }
  LocalInvariants at_inf =
      local_invariants(Place::infinite(phi.field()), coeffs);
  b.num_deg = b.den_deg + std::max<long long>(0, -at_inf.nu_B);
  return b;
}

Place smallest_good_place(const DrinfeldModule& phi) {
  std::set<Place> avoid;
  for (int i = 1; i <= phi.rank(); ++i) {
    const RatFunc& a = phi.coeff(i);
    if (a.is_zero()) continue;
    for (const Place& v : support(a)) {
      if (!v.is_finite()) continue;
      long long vw = *valuation(a, v);
      if (vw < 0 || (i == phi.rank() && vw != 0)) avoid.insert(v);
    }
  }
  const FqCtx* F = phi.field();
  for (int d = 1; d <= 16; ++d)
    for (const PolyA& p : monic_irreducibles(F, d)) {
      Place v = Place::finite(p);
      if (!avoid.count(v)) return v;
    }
  fail(Err::Unsupported, "no good place of degree <= 16");
}

std::vector<RatFunc> kernel_points(const DrinfeldModule& phi, const PolyA& a) {
  require(!a.is_zero(), Err::ZeroArgument,
          "the kernel of phi_0 is all of L, not a torsion module");
  const FqCtx* F = phi.field();
  std::vector<RatFunc> out{RatFunc::zero(F)};
  if (a.deg() == 0) return out;  // phi_a is scaling by a unit

  TorsionBounds b = torsion_degree_bounds(phi);
  Place w = smallest_good_place(phi);
  LocalModule lm(phi, w);
  // Every torsion point is w-integral (all kernel slopes at a good place are
  // <= 0), so it is a polynomial mod p^N; N deg w >= num + den + 1 makes the
  // reconstruction unique.
  long long N =
      std::max<long long>(4, (b.num_deg + b.den_deg) / w.deg() + 1);

  for (int attempt = 0;; ++attempt) {
    try {
      LocalAdditivePoly f = lm.localize(a, (N + 16) << attempt);
      RootReport rep = isolate_roots(f, N, 1 << 16);
      require(rep.complete, Err::PrecisionExhausted,
              "local root isolation returned an incomplete report");
      for (const LaurentSeries& y : rep.roots) {
        std::optional<RatFunc> cand = reconstruct(lm.context(), y, N, b);
        if (!cand) continue;
        if (!phi.phi_eval(a, *cand).is_zero()) continue;
        out.push_back(*cand);
      }
      break;
    } catch (const Error& e) {
      if (e.code() != Err::PrecisionExhausted || attempt >= 3) throw;
      out.erase(out.begin() + 1, out.end());
    }
  }
  sort_points(out);
  return out;
}

TorsionModule torsion_global(const DrinfeldModule& phi) {
  const FqCtx* F = phi.field();
  Place w1 = smallest_good_place(phi);

  // phi[p](L) != 0 forces A/p to embed into the good reduction at any good
  // place of residue characteristic != p, so deg p <= deg w for every such
  // place; the smallest good place has smaller degree than any prime beyond
  // its own degree, which excludes them all.
  std::vector<std::vector<RatFunc>> parts;
  for (int dp = 1; dp <= w1.deg(); ++dp)
    for (const PolyA& p : monic_irreducibles(F, dp)) {
      std::vector<RatFunc> prev = kernel_points(phi, p);
      if (prev.size() <= 1) continue;
      PolyA pk = p;
      for (int k = 1;; ++k) {
        require(k <= 12, Err::BudgetExceeded,
                "torsion p-power tower failed to stabilize");
        pk = pk * p;
        std::vector<RatFunc> next = kernel_points(phi, pk);
        if (next.size() == prev.size()) break;
        prev = std::move(next);
      }
      parts.push_back(std::move(prev));
    }

  std::vector<RatFunc> pts{RatFunc::zero(F)};
  for (const auto& part : parts) {
    std::vector<RatFunc> grown;
    grown.reserve(pts.size() * part.size());
    for (const RatFunc& s : pts)
      for (const RatFunc& x : part) grown.push_back(s + x);
    require(grown.size() <= (1u << 20), Err::Overflow,
            "torsion module too large to enumerate");
    size_t expect = grown.size();
    sort_points(grown);
    require(grown.size() == expect, Err::InvariantViolation,
            "p-primary torsion parts are not independent");
    pts = std::move(grown);
  }

  TorsionModule T{{}, {}, PolyA::one(F), 0};
  T.size_log_q = ilog_q(pts.size(), F->q, "torsion size is not a power of q");
  T.points = std::move(pts);
  if (T.size_log_q == 0) return T;

  // F_q-basis with coordinates, grown greedily over the sorted points.
  int n = static_cast<int>(T.size_log_q);
  std::vector<RatFunc> basis;
  std::map<RatFunc, std::vector<FqElem>, RatLess> coords;
  coords.emplace(RatFunc::zero(F), std::vector<FqElem>());
  for (const RatFunc& x : T.points) {
    if (coords.count(x)) continue;
    std::vector<std::pair<RatFunc, std::vector<FqElem>>> old(coords.begin(),
                                                             coords.end());
    basis.push_back(x);
    for (const auto& [s, cs] : old)
      for (int c = 1; c < F->q; ++c) {
        FqElem e(F, c);
        std::vector<FqElem> nc = cs;
        nc.resize(basis.size(), FqElem::zero(F));
        nc.back() = e;
        coords.emplace(s + x * RatFunc::from(e), std::move(nc));
      }
  }
  require(static_cast<int>(basis.size()) == n, Err::InvariantViolation,
          "torsion basis does not match the module size");

  // T acts by phi_T; the module is the cokernel of T I - M over F_q[T], whose
  // Smith form lists the invariant factors.
  PolyA Tgen = PolyA::gen(F);
  std::vector<std::vector<PolyA>> A(
      static_cast<size_t>(n),
      std::vector<PolyA>(static_cast<size_t>(n), PolyA::zero(F)));
  for (int j = 0; j < n; ++j) {
    RatFunc y = phi.phi_eval(Tgen, basis[static_cast<size_t>(j)]);
    auto it = coords.find(y);
    require(it != coords.end(), Err::InvariantViolation,
            "torsion module is not phi_T-stable");
    std::vector<FqElem> col = it->second;
    col.resize(static_cast<size_t>(n), FqElem::zero(F));
    for (int i = 0; i < n; ++i) {
      PolyA e = PolyA::constant(-col[static_cast<size_t>(i)]);
      if (i == j) e = e + Tgen;
      A[static_cast<size_t>(i)][static_cast<size_t>(j)] = e;
    }
  }
  std::vector<PolyA> diag = smith_diagonal(A);
  long long degsum = 0;
  for (const PolyA& d : diag) {
    degsum += d.deg();
    if (d.deg() > 0) T.invariant_factors.push_back(d);
  }
  require(degsum == n, Err::InvariantViolation,
          "invariant factor degrees do not sum to the module dimension");
  if (!T.invariant_factors.empty()) T.annihilator = T.invariant_factors.back();
  return T;
}

}  // namespace djulia
