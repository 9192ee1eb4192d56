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

#include "djulia/poly.hpp"

#include <map>
#include <mutex>
#include <random>

namespace djulia {

bool poly_less(const PolyA& a, const PolyA& b) {
  if (a.deg() != b.deg()) return a.deg() < b.deg();
  for (int i = a.deg(); i >= 0; --i) {
    int ca = a.coeff(i).code(), cb = b.coeff(i).code();
    if (ca != cb) return ca < cb;
  }
  return false;
}

PolyA monic_from_code(const FqCtx* F, int d, long long code) {
  std::vector<FqElem> c(d + 1, fq_zero(F));
  for (int i = 0; i < d; ++i) {
    c[i] = FqElem(F, (int)(code % F->q));
    code /= F->q;
  }
  c[d] = fq_one(F);
  return PolyA(F, std::move(c));
}

namespace {

// Cache of irreducible lists per (field, degree); built ascending by trial
// division against the smaller cached degrees (map references are stable).
std::vector<PolyA>& irreducible_cache(const FqCtx* F, int d) {
  static std::mutex mu;
  static std::map<std::pair<const FqCtx*, int>, std::vector<PolyA>> cache;
  std::lock_guard<std::mutex> lock(mu);
  for (int lvl = 1; lvl <= d; ++lvl) {
    auto key = std::make_pair(F, lvl);
    if (cache.count(key)) continue;
    std::vector<PolyA> out;
    long long count = 1;
    for (int i = 0; i < lvl; ++i) count *= F->q;
    for (long long code = 0; code < count; ++code) {
      PolyA f = monic_from_code(F, lvl, code);
      bool irred = true;
      for (int dd = 1; irred && 2 * dd <= lvl; ++dd)
        for (const PolyA& g : cache.at({F, dd}))
          if ((f % g).is_zero()) { irred = false; break; }
      if (irred) out.push_back(f);
    }
    cache.emplace(key, std::move(out));
  }
  return cache.at({F, d});
}

}  // namespace

std::vector<PolyA> monic_irreducibles(const FqCtx* F, int d) {
  return irreducible_cache(F, d);
}

bool is_irreducible(const PolyA& f) {
  if (f.deg() < 1) return false;
  const FqCtx* F = f.context();
  PolyA m = f.monic();
  for (int dd = 1; 2 * dd <= f.deg(); ++dd)
    for (const PolyA& g : monic_irreducibles(F, dd))
      if ((m % g).is_zero()) return false;
  return true;
}

int poly_ord(const PolyA& f, const PolyA& g) {
  require(!f.is_zero(), Err::ZeroArgument, "ord of zero polynomial");
  require(g.deg() >= 1, Err::ConstantArgument, "ord at a constant");
  int k = 0;
  PolyA r = f;
  while (true) {
    auto [q, rem] = divmod(r, g);
    if (!rem.is_zero()) return k;
    r = q;
    ++k;
  }
}

PolyA poly_pth_root(const PolyA& f) {
  const FqCtx* F = f.context();
  int p = F->p;
  std::vector<FqElem> out;
  for (int i = 0; i <= f.deg(); i += p) out.push_back(f.coeff(i).pth_root());
  return PolyA(F, std::move(out));
}

PolyA poly_frobenius_power(const PolyA& f, int k) {
  if (k == 0 || f.is_zero()) return f;
  const FqCtx* F = f.context();
  long long pk = 1;
  for (int i = 0; i < k; ++i) pk *= F->p;
  std::vector<FqElem> out((size_t)(f.deg() * pk + 1), fq_zero(F));
  for (int i = 0; i <= f.deg(); ++i)
    out[(size_t)i * pk] = f.coeff(i).pow(pk);
  return PolyA(F, std::move(out));
}

namespace {

// Deterministic candidate stream for equal-degree splitting, seeded from the
// polynomial itself so factorizations are reproducible run to run.
uint64_t poly_seed(const PolyA& f) {
  uint64_t h = 0x9e3779b97f4a7c15ull ^ (uint64_t)f.context()->q;
  for (int i = 0; i <= f.deg(); ++i)
    h = h * 0x100000001b3ull + (uint64_t)(f.coeff(i).code() + 1);
  return h;
}

PolyA random_poly(const FqCtx* F, int deg_below, std::mt19937_64& rng) {
  std::vector<FqElem> c;
  for (int i = 0; i < deg_below; ++i)
    c.push_back(FqElem(F, (int)(rng() % F->q)));
  return PolyA(F, std::move(c));
}

// g is a squarefree product of distinct monic irreducibles, all of degree d;
// Cantor-Zassenhaus splitting (quadratic-residue form for odd q, trace form
// in characteristic 2).
PolyA edf(const PolyA& g, int d, std::mt19937_64& rng) {
  if (g.deg() == d) return g;
  const FqCtx* F = g.context();
  PolyA one = PolyA::one(F);
  while (true) {
    PolyA a = random_poly(F, g.deg(), rng);
    if (a.is_zero()) continue;
    PolyA c(F);
    if (F->p != 2) {
      // norm to the degree-d subfield, then a Legendre-symbol power
      PolyA n = a % g, fr = a % g;
      for (int i = 1; i < d; ++i) {
        fr = powmod(fr, F->q, g);
        n = (n * fr) % g;
      }
      PolyA b = powmod(n, (F->q - 1) / 2, g);
      c = gcd(b - one, g);
    } else {
      // absolute trace over F_2: a + a^2 + ... + a^(2^(ed-1))
      PolyA tr = a % g, sq = a % g;
      int bits = F->e * d;
      for (int i = 1; i < bits; ++i) {
        sq = powmod(sq, 2, g);
        tr = tr + sq;
      }
      c = gcd(tr, g);
    }
    if (c.deg() > 0 && c.deg() < g.deg()) {
      if (c.deg() % d != 0) c = g / c;  // keep a clean multiple of d
      return edf(c.deg() <= g.deg() / 2 ? c : g / c, d, rng);
    }
  }
}

// w monic squarefree: find one irreducible factor via distinct-degree sieve.
PolyA factor_squarefree(const PolyA& w, std::mt19937_64& rng) {
  const FqCtx* F = w.context();
  PolyA x = PolyA::gen(F);
  PolyA h = x % w;
  for (int d = 1; 2 * d <= w.deg(); ++d) {
    h = powmod(h, F->q, w);
    PolyA g = gcd(h - x, w);
    if (g.deg() > 0) return edf(g, d, rng);
  }
  return w;  // irreducible
}

PolyA any_irreducible_factor(const PolyA& f, std::mt19937_64& rng) {
  PolyA df = f.derivative();
  if (df.is_zero()) return any_irreducible_factor(poly_pth_root(f), rng);
  PolyA w = f / gcd(f, df);
  return factor_squarefree(w, rng);
}

}  // namespace

std::vector<std::pair<PolyA, int>> factor(const PolyA& f) {
  require(!f.is_zero(), Err::ZeroArgument, "factor of zero polynomial");
  std::mt19937_64 rng(poly_seed(f));
  PolyA rem = f.monic();
  std::vector<std::pair<PolyA, int>> out;
  while (rem.deg() > 0) {
    PolyA h = any_irreducible_factor(rem, rng);
    int m = 0;
    while (true) {
      auto [q, r] = divmod(rem, h);
      if (!r.is_zero()) break;
      rem = q;
      ++m;
    }
    out.emplace_back(h, m);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return poly_less(a.first, b.first); });
  return out;
}

std::tuple<PolyA, PolyA, PolyA> poly_ext_gcd(const PolyA& a, const PolyA& b) {
  const FqCtx* F = a.context();
  PolyA r0 = a, r1 = b;
  PolyA s0 = PolyA::one(F), s1 = PolyA::zero(F);
  PolyA u0 = PolyA::zero(F), u1 = PolyA::one(F);
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    PolyA s2 = s0 - q * s1, u2 = u0 - q * u1;
    r0 = r1; r1 = r2;
    s0 = s1; s1 = s2;
    u0 = u1; u1 = u2;
  }
  if (r0.is_zero()) return {r0, s0, u0};
  FqElem c = r0.lead().inv();
  return {r0 * c, s0 * c, u0 * c};
}

std::string poly_str(const PolyA& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::string out;
  for (int i = f.deg(); i >= 0; --i) {
    int c = f.coeff(i).code();
    if (c == 0) continue;
    if (!out.empty()) out += "+";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) out += std::to_string(c) + "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace djulia
