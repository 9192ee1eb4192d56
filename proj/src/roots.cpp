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

#include "djulia/roots.hpp"

#include <algorithm>
#include <climits>
#include <functional>

#include "djulia/linalg.hpp"

namespace djulia {

namespace {

long long q_power(const FqCtx* F, int i) {
  long long e = 1;
  for (int j = 0; j < i; ++j) {
    e *= F->q;
    require(e < (1LL << 40), Err::Overflow, "q^i exponent overflow");
  }
  return e;
}

void validate(const LocalAdditivePoly& f) {
  require(f.C != nullptr && !f.a.empty(), Err::DegeneratePolynomial,
          "additive polynomial without coefficients");
  require(!f.a.front().is_zero(), Err::DegeneratePolynomial,
          "y-coefficient is zero to working precision (inseparable "
          "or undecidable)");
  require(!f.a.back().is_zero(), Err::DegeneratePolynomial,
          "top coefficient is zero to working precision");
}

// Crude Newton basin radius: once v(f(y)) > v(a_0) + beta the iteration
// y <- y - f(y)/a_0 contracts to a unique root.  Coefficients that are only
// zero to precision P enter at the floor P, which can only enlarge beta,
// so the test stays sound.
Rat crude_beta(const LocalAdditivePoly& f) {
  long long k = f.a[0].val();
  Rat best(-(1LL << 40));
  for (size_t i = 1; i < f.a.size(); ++i) {
    long long vi = f.a[i].is_zero() ? f.a[i].prec() : f.a[i].val();
    best = Rat::max(best, Rat(k - vi, q_power(f.C->field(), (int)i) - 1));
  }
  return best;
}

void polygon_data(const LocalAdditivePoly& f, const LaurentSeries& wc,
                  bool no_constant, std::vector<PolygonPoint>& pts,
                  std::vector<PolygonPoint>& unknown) {
  const FqCtx* F = f.C->field();
  for (size_t i = 0; i < f.a.size(); ++i) {
    long long x = q_power(F, (int)i);
    if (f.a[i].is_zero())
      unknown.push_back({x, f.a[i].prec()});
    else
      pts.push_back({x, f.a[i].val()});
  }
  if (!no_constant) {
    if (wc.is_zero())
      unknown.push_back({0, wc.prec()});
    else
      pts.push_back({0, wc.val()});
  }
}

Rat line_at(const PolygonSegment& seg, long long x) {
  return Rat(seg.a.y) + seg.slope * Rat(x - seg.a.x);
}

// k_v digit of the coefficient on the segment's support line at x; zero
// when the coefficient sits strictly above the line.
PolyA digit_on_line(const LaurentSeries& c, const Rat& level) {
  if (level.den() != 1) return PolyA::zero(c.context()->field());
  return c.digit(level.num());
}

struct ResidualTerm {
  int i;        // frobenius index; -1 for the constant term
  PolyA digit;  // nonzero element of k_v
};

// Residual equation of f along one polygon segment, after the substitution
// y = pi^m z: sum of digit * z^(q^i) (+ constant) over k_v.
std::vector<ResidualTerm> residual_terms(const LocalAdditivePoly& f,
                                         const LaurentSeries& wc,
                                         bool no_constant,
                                         const PolygonSegment& seg) {
  std::vector<ResidualTerm> terms;
  const FqCtx* F = f.C->field();
  if (!no_constant) {
    PolyA d = digit_on_line(wc, line_at(seg, 0));
    if (!d.is_zero()) terms.push_back({-1, d});
  }
  for (size_t i = 0; i < f.a.size(); ++i) {
    PolyA d = digit_on_line(f.a[i], line_at(seg, q_power(F, (int)i)));
    if (!d.is_zero()) terms.push_back({(int)i, d});
  }
  return terms;
}

// All z in k_v with sum digit * z^(q^i) (+ const) = 0, found by solving the
// F_q-affine system in the power basis of k_v.
std::vector<PolyA> residual_roots(const LocalContext& C,
                                  const std::vector<ResidualTerm>& terms) {
  const FqCtx* F = C.field();
  int d = C.deg();
  FqMatrix M(F, d, d);
  std::vector<FqElem> rhs(d, FqElem::zero(F));
  bool homogeneous = true;
  for (const auto& t : terms) {
    if (t.i < 0) {
      homogeneous = false;
      for (int r = 0; r < d; ++r) rhs[r] = rhs[r] - t.digit.coeff(r);
      continue;
    }
  }
  for (int j = 0; j < d; ++j) {
    std::vector<FqElem> basis(d, FqElem::zero(F));
    basis[j] = FqElem::one(F);
    PolyA tj(F, basis);
    PolyA img = PolyA::zero(F);
    for (const auto& t : terms) {
      if (t.i < 0) continue;
      img = img + C.kv_mul(t.digit, C.kv_frobenius(tj, t.i));
    }
    for (int r = 0; r < d; ++r) M.at(r, j) = img.coeff(r);
  }
  AffineSolution sol = solve_affine(M, rhs);
  std::vector<PolyA> out;
  for_each_solution(sol, F, [&](const std::vector<FqElem>& x) {
    PolyA z(F, x);
    if (homogeneous && z.is_zero()) return;  // valuation is strictly larger
    out.push_back(std::move(z));
  });
  return out;
}

bool is_simple_segment(const PolygonSegment& seg, long long k) {
  return line_at(seg, 1) == Rat(k);  // (1, v(a_0)) on the support line
}

}  // namespace

LaurentSeries LocalAdditivePoly::eval(const LaurentSeries& y) const {
  require(!a.empty(), Err::DegeneratePolynomial, "empty additive polynomial");
  LaurentSeries acc = w;
  for (size_t i = 0; i < a.size(); ++i)
    acc = acc + a[i] * y.frobenius_power((long long)i);
  return acc;
}

NewtonPolygon newton_polygon(const LocalAdditivePoly& f) {
  validate(f);
  std::vector<PolygonPoint> pts, unk;
  polygon_data(f, f.w, f.w_exact_zero, pts, unk);
  NewtonPolygon np = NewtonPolygon::from_points(pts);
  np.check_unknown(unk);
  return np;
}

LaurentSeries hensel_lift(const LocalAdditivePoly& f, LaurentSeries y0,
                          long long target_prec) {
  validate(f);
  long long k = f.a[0].val();
  Rat beta = crude_beta(f);
  LaurentSeries a0inv = f.a[0].inv();
  LaurentSeries y = std::move(y0);
  long long last = LLONG_MIN;
  long long cap = 256 + 4 * std::max<long long>(target_prec, 1);
  for (long long iter = 0; iter < cap; ++iter) {
    LaurentSeries fy = f.eval(y);
    if (fy.is_zero()) {
      long long P = fy.prec();
      require(Rat(P) > Rat(k) + beta && P - k >= target_prec,
              Err::PrecisionExhausted,
              "residue of f(y) vanished before certification was possible");
      require(y.prec() >= target_prec, Err::PrecisionExhausted,
              "approximation lost precision during lifting");
      return y.truncate(target_prec);
    }
    long long v = fy.val();
    if (Rat(v) > Rat(k) + beta && v - k >= target_prec) {
      require(y.prec() >= target_prec, Err::PrecisionExhausted,
              "approximation lost precision during lifting");
      return y.truncate(target_prec);
    }
    require(v > last, Err::HenselHypothesisFailed,
            "Newton iteration stopped contracting");
    last = v;
    y = y - fy * a0inv;
  }
  fail(Err::HenselHypothesisFailed, "Newton iteration did not converge");
}

RootReport local_roots(const LocalAdditivePoly& f, long long target_prec) {
  validate(f);
  RootReport rep;
  std::vector<PolygonPoint> pts, unk;
  polygon_data(f, f.w, f.w_exact_zero, pts, unk);
  NewtonPolygon hull = NewtonPolygon::from_points(pts);
  hull.check_unknown(unk);
  long long k = f.a[0].val();
  Rat beta = crude_beta(f);
  long long work = target_prec + 8 + std::max<long long>(0, (Rat(k) + beta).ceil());
  if (f.w_exact_zero) rep.roots.push_back(f.C->zero(target_prec));
  for (const auto& seg : hull.segments()) {
    if (seg.slope.den() != 1) {
      rep.notes.push_back("segment of slope " + seg.slope.str() +
                          " (length " + std::to_string(seg.length) +
                          "): roots have fractional valuation, none rational");
      continue;
    }
    long long m = -seg.slope.num();
    auto terms = residual_terms(f, f.w, f.w_exact_zero, seg);
    bool simple = is_simple_segment(seg, k);
    // Exhaustive sweep of the residue field.
    for (const PolyA& z : f.C->kv_elements()) {
      if (z.is_zero()) continue;
      PolyA val = PolyA::zero(f.C->field());
      for (const auto& t : terms) {
        if (t.i < 0)
          val = val + t.digit;
        else
          val = val + f.C->kv_mul(t.digit, f.C->kv_frobenius(z, t.i));
      }
      val = f.C->kv_reduce(val);
      if (!val.is_zero()) continue;
      if (simple) {
        LaurentSeries y0 = f.C->make(m, z, std::max<long long>(8, work - m));
        rep.roots.push_back(hensel_lift(f, y0, target_prec));
      } else {
        rep.complete = false;
        rep.notes.push_back(
            "non-simple residual root at valuation " + std::to_string(m) +
            ": single pass cannot separate the cluster (descent required)");
      }
    }
  }
  return rep;
}

RootReport isolate_roots(const LocalAdditivePoly& f, long long target_prec,
                         long long max_nodes) {
  validate(f);
  RootReport rep;
  long long k = f.a[0].val();
  Rat beta = crude_beta(f);
  long long work =
      target_prec + 8 + std::max<long long>(0, (Rat(k) + beta).ceil());
  long long nodes = 0;

  std::function<void(const LaurentSeries&, long long, bool, int)> node =
      [&](const LaurentSeries& c, long long m_floor, bool wc_exact_zero,
          int depth) {
        require(++nodes <= max_nodes, Err::BudgetExceeded,
                "root isolation exceeded the node budget");
        require(depth <= 256, Err::PrecisionExhausted,
                "root disks not separated within the depth bound");
        LaurentSeries wc = f.eval(c);
        if (wc_exact_zero) {
          rep.roots.push_back(c.truncate(target_prec));
        } else if (wc.is_zero()) {
          // One root hides deeper than every additive slope; certified by
          // the Newton basin once the residue is small enough.
          long long P = wc.prec();
          require(Rat(P) > Rat(k) + beta, Err::PrecisionExhausted,
                  "f(center) vanishes to precision but is outside the "
                  "certified basin");
          require(P - k >= target_prec, Err::PrecisionExhausted,
                  "basin root cannot be reported at the requested precision");
          rep.roots.push_back(c.truncate(target_prec));
        }
        std::vector<PolygonPoint> pts, unk;
        polygon_data(f, wc, wc_exact_zero || wc.is_zero(), pts, unk);
        NewtonPolygon hull = NewtonPolygon::from_points(pts);
        hull.check_unknown(unk);
        for (const auto& seg : hull.segments()) {
          if (seg.slope.den() != 1) continue;  // fractional: no rational roots
          long long m = -seg.slope.num();
          if (m < m_floor) continue;  // handled at a shallower level
          auto terms =
              residual_terms(f, wc, wc_exact_zero || wc.is_zero(), seg);
          bool simple = is_simple_segment(seg, k);
          for (const PolyA& z : residual_roots(*f.C, terms)) {
            LaurentSeries c2 =
                c + f.C->make(m, z, std::max<long long>(8, work - m));
            if (simple)
              rep.roots.push_back(hensel_lift(f, c2, target_prec));
            else
              node(c2, m + 1, false, depth + 1);
          }
        }
      };

  node(f.C->zero(work), LLONG_MIN / 4, f.w_exact_zero, 0);
  return rep;
}

long long count_root_prefixes(const LocalAdditivePoly& f, long long nu_stop,
                              long long max_nodes) {
  validate(f);
  long long k = f.a[0].val();
  Rat beta = crude_beta(f);
  long long work = std::max<long long>(nu_stop, nu_stop - k) + 8 +
                   std::max<long long>(0, (Rat(k) + beta).ceil());
  work = std::max<long long>(work, 8);
  long long nodes = 0;

  // Every hull segment's support line satisfies line(0) <= k + depth, so an
  // unknown constant term with prec >= k + nu_stop can only displace segments
  // deeper than nu_stop; those are folded into the center's own class below,
  // which keeps the count exact.
  std::function<long long(const LaurentSeries&, long long, bool, int)> node =
      [&](const LaurentSeries& c, long long m_floor, bool exact_zero,
          int depth) -> long long {
    require(++nodes <= max_nodes, Err::BudgetExceeded,
            "class counting exceeded the node budget");
    require(depth <= 256, Err::PrecisionExhausted,
            "root classes not separated within the depth bound");
    LaurentSeries wc = f.eval(c);
    bool self = exact_zero;
    if (!exact_zero && wc.is_zero()) {
      require(wc.prec() - k >= nu_stop, Err::PrecisionExhausted,
              "residue classes undecidable at this precision");
      self = true;  // all continuations lie below nu_stop: one class
    }
    long long total = 0;
    std::vector<PolygonPoint> pts, unk;
    polygon_data(f, wc, exact_zero || wc.is_zero(), pts, unk);
    NewtonPolygon hull = NewtonPolygon::from_points(pts);
    hull.check_unknown(unk);
    for (const auto& seg : hull.segments()) {
      if (seg.slope <= Rat(-nu_stop)) {
        self = true;  // roots at depth >= nu_stop share the center's prefix
        continue;
      }
      if (seg.slope.den() != 1) continue;  // irrational digit above the stop
      long long m = -seg.slope.num();
      if (m < m_floor) continue;
      auto terms = residual_terms(f, wc, exact_zero || wc.is_zero(), seg);
      for (const PolyA& z : residual_roots(*f.C, terms))
        total += node(c + f.C->make(m, z, std::max<long long>(8, work - m)),
                      m + 1, false, depth + 1);
    }
    return total + (self ? 1 : 0);
  };

  return node(f.C->zero(work), LLONG_MIN / 4, f.w_exact_zero, 0);
}

}  // namespace djulia
