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

#include "djulia/tate.hpp"

#include <algorithm>
#include <climits>
#include <tuple>
#include <utility>

#include "djulia/roots.hpp"

namespace djulia {
namespace {

constexpr long long kExactPrec = 1LL << 30;

long long q_pow(long long q, long long e) {
  long long v = 1;
  for (long long i = 0; i < e; ++i) {
    require(v <= (1LL << 40) / q, Err::Overflow, "q-power overflows the budget");
    v *= q;
  }
  return v;
}

// All polynomials of degree <= max_deg (zero included), in coefficient-code
// order; max_deg < 0 gives just the zero polynomial.
std::vector<PolyA> polys_up_to(const FqCtx* F, int max_deg) {
  std::vector<PolyA> out;
  if (max_deg < 0) {
    out.push_back(PolyA::zero(F));
    return out;
  }
  long long total = 1;
  for (int i = 0; i <= max_deg; ++i) {
    require(total <= (1 << 20) / F->q, Err::BudgetExceeded,
            "polynomial enumeration too large");
    total *= F->q;
  }
  for (long long code = 0; code < total; ++code) {
    std::vector<FqElem> cs;
    long long c = code;
    for (int i = 0; i <= max_deg; ++i) {
      cs.emplace_back(F, static_cast<int>(c % F->q));
      c /= F->q;
    }
    out.emplace_back(F, std::move(cs));
  }
  return out;
}

// Expected valuation of sum psi_{a_i}(omega_i) under the max formula:
// min over nonzero a_i of q^{r1 deg a_i} v(omega_i); LLONG_MAX for the zero
// combination.
long long rigid_valuation(const std::vector<PolyA>& a,
                          const std::vector<long long>& gen_val, long long q,
                          int r1) {
  long long best = LLONG_MAX;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    best = std::min(best, q_pow(q, r1 * a[i].deg()) * gen_val[i]);
  }
  return best;
}

}  // namespace

TateLattice::TateLattice(DrinfeldModule psi, Place v, std::vector<RatFunc> gens,
                         long long prec)
    : lm_(std::move(psi), v), prec_(prec) {
  require(gens.size() <= 2, Err::Unsupported,
          "lattices of rank > 2 are not supported");
  const LocalInvariants& inv = lm_.invariants();
  for (long long w : inv.coeff_val)
    require(w == LLONG_MAX || w >= 0, Err::Unsupported,
            "psi must have integral coefficients at the working place");
  require(inv.coeff_val.back() == 0, Err::Unsupported,
          "psi must have good reduction at the working place");
  for (const RatFunc& g : gens) {
    require(!g.is_zero(), Err::ZeroArgument, "zero lattice generator");
    long long w = *valuation(g, v);
    require(w < 0, Err::Unsupported,
            "lattice generators must lie outside the unit disk");
    gens_.push_back(lm_.context().embed(g, w + prec_));
  }
}

LaurentSeries TateLattice::psi_image(const PolyA& b,
                                     const LaurentSeries& x) const {
  if (b.is_zero()) return lm_.context().zero(kExactPrec);
  LocalAdditivePoly f = lm_.localize(b, prec_);
  return f.eval(x);
}

LaurentSeries TateLattice::combination(const std::vector<PolyA>& b) const {
  require(b.size() == gens_.size(), Err::InvariantViolation,
          "combination tag length does not match the lattice rank");
  LaurentSeries acc = lm_.context().zero(kExactPrec);
  for (size_t i = 0; i < b.size(); ++i)
    acc = acc + psi_image(b[i], gens_[i]);
  return acc;
}

TateLattice lattice_reduce(const TateLattice& lat, int budget_deg) {
  if (lat.rank() == 0) return lat;
  const FqCtx* F = lat.psi().field();
  const long long q = F->q;
  const int r1 = lat.stable_rank();
  const int s = lat.rank();
  std::vector<PolyA> polys = polys_up_to(F, budget_deg);

  // Enumerate all combinations over the budget, tracking their tags.
  std::vector<std::vector<LaurentSeries>> images;
  for (int i = 0; i < s; ++i) {
    std::vector<LaurentSeries> col;
    for (const PolyA& b : polys)
      col.push_back(lat.psi_image(b, lat.generators()[static_cast<size_t>(i)]));
    images.push_back(std::move(col));
  }
  struct Combo {
    LaurentSeries x;
    long long val;
  };
  std::vector<Combo> combos;
  size_t count = 1;
  for (int i = 0; i < s; ++i) count *= polys.size();
  for (size_t code = 0; code < count; ++code) {
    if (code == 0) continue;  // the zero combination
    size_t c = code;
    LaurentSeries acc = lat.context().zero(kExactPrec);
    for (int i = 0; i < s; ++i) {
      acc = acc + images[static_cast<size_t>(i)][c % polys.size()];
      c /= polys.size();
    }
    require(!acc.is_zero(), Err::BudgetExceeded,
            "lattice generators are dependent within the enumeration budget");
    require(acc.val() < 0, Err::BudgetExceeded,
            "enumerated lattice element lies inside the unit disk");
    combos.push_back({acc, acc.val()});
  }

  // Greedy successive minima: maximal valuation = minimal absolute value.
  std::vector<LaurentSeries> basis;
  size_t best = 0;
  for (size_t i = 1; i < combos.size(); ++i)
    if (combos[i].val > combos[best].val) best = i;
  basis.push_back(combos[best].x);

  if (s == 2) {
    // Enumerate A*omega_1 down to the most negative combination valuation:
    // anything past that is too large to match any enumerated combination.
    long long min_val = LLONG_MAX;
    for (const Combo& c : combos) min_val = std::min(min_val, c.val);
    std::vector<LaurentSeries> line;
    for (int db = 0;
         q_pow(q, static_cast<long long>(r1) * db) * basis[0].val() >= min_val;
         ++db)
      for (const PolyA& b : polys_up_to(F, db)) {
        if (b.deg() != db) continue;
        line.push_back(lat.psi_image(b, basis[0]));
      }
    const LaurentSeries* pick = nullptr;
    for (const Combo& c : combos) {
      bool in_line = false;
      for (const LaurentSeries& y : line)
        if (eq_to_prec(c.x, y)) {
          in_line = true;
          break;
        }
      if (in_line) continue;
      if (!pick || c.val > pick->val()) pick = &c.x;
    }
    require(pick != nullptr, Err::BudgetExceeded,
            "second minimum not found within the enumeration budget");
    basis.push_back(*pick);
  }

  // Verify the max formula exhaustively on small combinations.
  std::vector<long long> gen_val;
  for (const LaurentSeries& w : basis) gen_val.push_back(w.val());
  std::vector<PolyA> small = polys_up_to(F, std::min(2, budget_deg));
  size_t vcount = 1;
  for (int i = 0; i < s; ++i) vcount *= small.size();
  for (size_t code = 1; code < vcount; ++code) {
    size_t c = code;
    std::vector<PolyA> tag;
    LaurentSeries acc = lat.context().zero(kExactPrec);
    for (int i = 0; i < s; ++i) {
      const PolyA& b = small[c % small.size()];
      c /= small.size();
      tag.push_back(b);
      acc = acc + lat.psi_image(b, basis[static_cast<size_t>(i)]);
    }
    long long expect = rigid_valuation(tag, gen_val, q, r1);
    require(!acc.is_zero() && acc.val() == expect, Err::BudgetExceeded,
            "reduced basis fails the successive-minima max formula");
  }
  return TateLattice(lat.lm_, std::move(basis), lat.working_prec());
}

LaurentSeries AdditivePowerSeries::eval(const LaurentSeries& x) const {
  require(!e.empty(), Err::DegeneratePolynomial, "empty additive series");
  LaurentSeries acc = e[0] * x;
  for (size_t i = 1; i < e.size(); ++i)
    acc = acc + e[i] * x.frobenius_power(static_cast<long long>(i));
  return acc;
}

AdditivePowerSeries exp_lattice(const TateLattice& lat, int n) {
  require(n >= 0, Err::NTooSmall, "negative truncation order");
  const LocalContext& C = lat.context();
  const FqCtx* F = C.field();
  const long long q = F->q;
  const int r1 = lat.stable_rank();
  const int s = lat.rank();

  AdditivePowerSeries out;
  out.e.push_back(C.one(kExactPrec));
  if (s == 0 || n == 0) return out;

  // Greedy box of lattice elements: deg <= D_i on generator i, starting at
  // degree 2 and extended by the smallest next element until the box spans
  // at least n dimensions, plus two extra steps for relative precision.
  std::vector<long long> gv;
  for (const LaurentSeries& w : lat.generators()) gv.push_back(-w.val());
  std::vector<int> D(static_cast<size_t>(s), 2);
  auto step_size = [&](int i) {
    return q_pow(q, static_cast<long long>(r1) * (D[static_cast<size_t>(i)] + 1)) *
           gv[static_cast<size_t>(i)];
  };
  auto extend = [&]() {
    int pick = 0;
    for (int i = 1; i < s; ++i)
      if (step_size(i) < step_size(pick)) pick = i;
    ++D[static_cast<size_t>(pick)];
  };
  auto dim = [&]() {
    long long total = 0;
    for (int i = 0; i < s; ++i) total += D[static_cast<size_t>(i)] + 1;
    return total;
  };
  while (dim() < n) extend();
  extend();
  extend();

  // Basis w_{i,j} = psi_{T^j}(omega_i), j <= D_i, ascending by size.
  struct BasisVec {
    long long size;
    int i, j;
    LaurentSeries w;
  };
  std::vector<BasisVec> basis;
  LocalAdditivePoly psiT =
      lat.local_module().localize(PolyA::gen(F), lat.working_prec());
  for (int i = 0; i < s; ++i) {
    LaurentSeries top = lat.generators()[static_cast<size_t>(i)];
    for (int j = 0; j <= D[static_cast<size_t>(i)]; ++j) {
      basis.push_back(
          {q_pow(q, static_cast<long long>(r1) * j) * gv[static_cast<size_t>(i)],
           i, j, top});
      if (j < D[static_cast<size_t>(i)]) top = psiT.eval(top);
    }
  }
  std::sort(basis.begin(), basis.end(), [](const BasisVec& a, const BasisVec& b) {
    return std::tie(a.size, a.i, a.j) < std::tie(b.size, b.i, b.j);
  });

  // e <- e - e^q / u^{q-1} with u = e(w), kernel growing one vector at a time.
  for (const BasisVec& bv : basis) {
    LaurentSeries u = out.eval(bv.w);
    require(!u.is_zero(), Err::BudgetExceeded,
            "lattice basis vector already in the kernel span");
    LaurentSeries scale = u.pow(q - 1).inv();
    std::vector<LaurentSeries> next;
    size_t len = std::min(out.e.size() + 1, static_cast<size_t>(n) + 1);
    for (size_t k = 0; k < len; ++k) {
      if (k == 0) {
        next.push_back(out.e[0]);
        continue;
      }
      LaurentSeries drop = out.e[k - 1].frobenius_power(1) * scale;
      next.push_back(k < out.e.size() ? out.e[k] - drop : -drop);
    }
    out.e = std::move(next);
  }

  // Honest absolute precision against the full-lattice coefficients: every
  // omitted subspace term carries at least q^k - q^{k-1} elements of size
  // >= V_out and q^{k-1} - 1 enumerated ones of size >= 1.
  long long v_out = LLONG_MAX;
  for (int i = 0; i < s; ++i) v_out = std::min(v_out, step_size(i));
  for (size_t k = 1; k < out.e.size(); ++k) {
    long long cap = (q - 1) * (v_out - 1) + q_pow(q, static_cast<long long>(k)) - 1;
    out.e[k] = out.e[k].truncate(cap);
  }
  return out;
}

UniformizedModule uniformize(const TateLattice& lat, int n) {
  const FqCtx* F = lat.psi().field();
  const int r1 = lat.stable_rank();
  const int s = lat.rank();
  const int r = r1 + s;
  require(n >= r, Err::NTooSmall,
          "truncation order must reach the rank of the uniformized module");

  TateLattice red = lattice_reduce(lat);
  AdditivePowerSeries e = exp_lattice(red, n);
  LocalAdditivePoly psiT =
      red.local_module().localize(PolyA::gen(F), red.working_prec());

  // (e o psi_T)_k = sum_{i+j=k} e_i psiT_j^{q^i}
  auto compose_k = [&](int k) {
    const LocalContext& C = red.context();
    LaurentSeries acc = C.zero(kExactPrec);
    for (int i = 0; i <= k && i < static_cast<int>(e.e.size()); ++i) {
      int j = k - i;
      if (j > psiT.top()) continue;
      acc = acc + e.e[static_cast<size_t>(i)] *
                      psiT.a[static_cast<size_t>(j)].frobenius_power(i);
    }
    return acc;
  };

  UniformizedModule out;
  out.r1 = r1;
  out.s = s;
  out.exp = e;
  for (int k = 0; k <= r; ++k) {
    LaurentSeries c = compose_k(k);
    for (int i = 0; i < k; ++i)
      c = c - out.coeffs[static_cast<size_t>(i)] *
                  e.e[static_cast<size_t>(k - i)].frobenius_power(i);
    out.coeffs.push_back(c);
  }
  require(!out.coeffs.back().is_zero(), Err::PrecisionExhausted,
          "top coefficient of the uniformized module vanished to precision");

  out.residual_prec = LLONG_MAX;
  for (const LaurentSeries& c : out.coeffs)
    out.residual_prec = std::min(out.residual_prec, c.prec());
  for (int k = r + 1; k <= n; ++k) {
    LaurentSeries res = compose_k(k);
    for (int i = 0; i <= r; ++i)
      res = res - out.coeffs[static_cast<size_t>(i)] *
                      e.e[static_cast<size_t>(k - i)].frobenius_power(i);
    require(res.is_zero(), Err::InvariantViolation,
            "functional equation residual does not vanish");
    out.residual_prec = std::min(out.residual_prec, res.prec());
  }
  return out;
}

std::vector<DivisionClass> division_points(const TateLattice& lat,
                                           const PolyA& a, long long prec) {
  require(!a.is_zero(), Err::ZeroArgument, "division by a = 0");
  const FqCtx* F = lat.psi().field();
  const int s = lat.rank();
  std::vector<PolyA> residues = polys_up_to(F, a.deg() - 1);
  size_t count = 1;
  for (int i = 0; i < s; ++i) {
    require(count <= (1 << 18) / residues.size(), Err::BudgetExceeded,
            "too many division classes");
    count *= residues.size();
  }

  std::vector<DivisionClass> out;
  for (size_t code = 0; code < count; ++code) {
    DivisionClass cls;
    size_t c = code;
    for (int i = 0; i < s; ++i) {
      cls.tag.push_back(residues[c % residues.size()]);
      c /= residues.size();
    }
    bool zero_tag = true;
    for (const PolyA& b : cls.tag)
      if (!b.is_zero()) zero_tag = false;

    for (int attempt = 0;; ++attempt) {
      try {
        long long p = (prec + 8) << attempt;
        LocalAdditivePoly f = lat.local_module().localize(a, p);
        f.w = -lat.combination(cls.tag);
        f.w_exact_zero = zero_tag;
        RootReport rep = isolate_roots(f, prec, 1 << 14);
        require(rep.complete, Err::PrecisionExhausted,
                "incomplete division-point report");
        cls.rational = !rep.roots.empty();
        if (cls.rational) cls.rep = rep.roots.front();
        break;
      } catch (const Error& err) {
        if (err.code() != Err::PrecisionExhausted || attempt >= 2) throw;
      }
    }
    out.push_back(std::move(cls));
  }
  return out;
}

}  // namespace djulia
