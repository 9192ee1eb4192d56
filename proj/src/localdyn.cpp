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

#include "djulia/localdyn.hpp"

#include <algorithm>
#include <climits>
#include <map>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

#include "djulia/polygon.hpp"

namespace djulia {

namespace {

// Stand-in absolute precision for coefficients that are exactly zero: far
// beyond anything a certified computation reaches, and zero-to-precision
// data only ever weakens certificates, so this is sound.
constexpr long long kZeroPrec = 1LL << 28;

long long q_pow(long long q, long long e, long long cap = (1LL << 40)) {
  long long r = 1;
  for (long long i = 0; i < e; ++i) {
    r *= q;
    require(r <= cap, Err::Overflow, "q-power exceeds the supported range");
  }
  return r;
}

// Exact log_q of a q-power.
long long ilog_q(long long n, long long q, Err code, const char* what) {
  long long lg = 0;
  while (n > 1 && n % q == 0) {
    n /= q;
    ++lg;
  }
  require(n == 1, code, what);
  return lg;
}

std::vector<RatFunc> all_coeffs(const DrinfeldModule& phi) {
  std::vector<RatFunc> c;
  for (int i = 0; i <= phi.rank(); ++i) c.push_back(phi.coeff(i));
  return c;
}

// Small integer code of a residue-field element (coefficients base q).
long long kv_code(const PolyA& a, long long q) {
  long long code = 0, scale = 1;
  for (int i = 0; i <= a.deg(); ++i) {
    code += a.coeff(i).code() * scale;
    scale *= q;
  }
  return code;
}

}  // namespace

LocalInvariants local_invariants_from_valuations(
    const Place& v, const std::vector<long long>& coeff_val) {
  require(coeff_val.size() >= 2, Err::DegeneratePolynomial,
          "an additive polynomial needs a_0 and at least one q-power term");
  require(coeff_val.front() != LLONG_MAX, Err::DegeneratePolynomial,
          "linear coefficient a_0 must be nonzero");
  require(coeff_val.back() != LLONG_MAX, Err::DegeneratePolynomial,
          "top coefficient a_r must be nonzero");
  const FqCtx* F = v.field();
  const long long q = F->q;
  const int r = static_cast<int>(coeff_val.size()) - 1;

  LocalInvariants I(v);
  I.d = v.deg();
  I.coeff_val = coeff_val;

  bool first = true;
  for (int i = 1; i <= r; ++i) {
    if (I.coeff_val[i] == LLONG_MAX) continue;
    Rat ratio(I.coeff_val[i], q_pow(q, i) - 1);
    if (first || ratio < I.m) I.m = ratio;
    first = false;
  }
  const long long qr1 = q_pow(q, r) - 1;
  I.c_v = Rat(I.coeff_val[r] * I.d, qr1);
  I.j_v = Rat(I.d) * (Rat(I.coeff_val[r], qr1) - I.m);
  I.rho = Rat(I.d) * I.m;
  for (int i = 1; i <= r; ++i)
    if (I.coeff_val[i] != LLONG_MAX &&
        Rat(I.coeff_val[i], q_pow(q, i) - 1) == I.m)
      I.r1 = i;
  I.s = r - I.r1;
  I.vj = (I.j_v / Rat(I.d)).ceil();
  I.nu_rho = (-I.m).ceil();

  std::vector<PolygonPoint> pts;
  for (int i = 0; i <= r; ++i)
    if (I.coeff_val[i] != LLONG_MAX) pts.push_back({q_pow(q, i), I.coeff_val[i]});
  NewtonPolygon hull = NewtonPolygon::from_points(pts);
  Rat log_plus_tinv =
      Rat::max(Rat(0), Rat(*valuation(RatFunc::gen(F), v) * I.d));
  I.B_T_log = hull.max_slope() * Rat(I.d) + log_plus_tinv / Rat(qr1);
  I.nu_B = (-I.B_T_log / Rat(I.d)).ceil();
  return I;
}

LocalInvariants local_invariants(const Place& v,
                                 const std::vector<RatFunc>& coeffs) {
  std::vector<long long> vals(coeffs.size(), LLONG_MAX);
  for (size_t i = 0; i < coeffs.size(); ++i)
    if (!coeffs[i].is_zero()) vals[i] = *valuation(coeffs[i], v);
  return local_invariants_from_valuations(v, vals);
}

std::string LocalInvariants::str() const {
  std::ostringstream os;
  os << "place " << v.str() << ": d=" << d << " m=" << m.str()
     << " c_v=" << c_v.str() << " j_v=" << j_v.str() << " rho=" << rho.str()
     << " r1=" << r1 << " s=" << s << " B_T=" << B_T_log.str()
     << " vj=" << vj << " nu_rho=" << nu_rho << " nu_B=" << nu_B;
  return os.str();
}

LocalModule::LocalModule(DrinfeldModule phi, Place v)
    : phi_(std::move(phi)),
      C_(std::make_shared<LocalContext>(v)),
      inv_(local_invariants(v, all_coeffs(phi_))) {}

LocalAdditivePoly LocalModule::localize(const PolyA& a, long long prec) const {
  require(!a.is_zero(), Err::ZeroArgument, "phi_a undefined for a = 0");
  require(prec >= 1, Err::PrecisionExhausted,
          "localization needs positive working precision");
  const int r = phi_.rank();
  const Place& v = C_->place();

  auto embed_exact = [&](const RatFunc& x) {
    if (x.is_zero()) return C_->zero(kZeroPrec);
    return C_->embed(x, *valuation(x, v) + prec);
  };

  std::vector<LaurentSeries> pT;
  for (int i = 0; i <= r; ++i) pT.push_back(embed_exact(phi_.coeff(i)));

  // Twisted Horner: acc <- acc * phi_T + b_j with the composition product
  // (f * g)_{i+j} += f_i g_j^{q^i}, carried out in series arithmetic.
  std::vector<LaurentSeries> acc;
  acc.push_back(embed_exact(RatFunc::from(a.coeff(a.deg()))));
  for (int j = a.deg() - 1; j >= 0; --j) {
    std::vector<LaurentSeries> out(acc.size() + static_cast<size_t>(r),
                                   C_->zero(kZeroPrec));
    for (size_t i = 0; i < acc.size(); ++i) {
      if (acc[i].is_zero() && acc[i].prec() >= kZeroPrec) continue;
      for (int k = 0; k <= r; ++k)
        out[i + static_cast<size_t>(k)] =
            out[i + static_cast<size_t>(k)] +
            acc[i] * pT[static_cast<size_t>(k)].frobenius_power(
                         static_cast<long long>(i));
    }
    out[0] = out[0] + embed_exact(RatFunc::from(a.coeff(j)));
    acc = std::move(out);
  }
  require(!acc.back().is_zero(), Err::PrecisionExhausted,
          "top coefficient of phi_a lost to working precision");
  return LocalAdditivePoly{C_.get(), std::move(acc), C_->zero(kZeroPrec),
                           /*w_exact_zero=*/true};
}

bool LocalModule::in_phi0(const RatFunc& x) const {
  if (x.is_zero()) return true;
  return *valuation(x, C_->place()) >= inv_.nu_rho;
}

LocalModule::JuliaResult LocalModule::julia_contains(const RatFunc& x,
                                                     long long budget) const {
  const FqCtx* F = phi_.field();
  const long long win = std::max<long long>(0, inv_.nu_rho - inv_.nu_B);
  const long long dim = static_cast<long long>(inv_.d) * win;
  if (budget < 0) budget = dim + 1;

  JuliaResult res{false, false, PolyA::one(F), -1};
  if (x.is_zero()) {
    res.decided = true;
    res.contained = true;
    return res;
  }

  const int r = phi_.rank();
  long long rel0 = 16 + 4 * (win + 4);
  for (int attempt = 0;; ++attempt) {
    try {
      std::vector<LaurentSeries> pT;
      for (int i = 0; i <= r; ++i) {
        const RatFunc& c = phi_.coeff(i);
        pT.push_back(c.is_zero()
                         ? C_->zero(kZeroPrec)
                         : C_->embed(c, *valuation(c, C_->place()) + rel0));
      }
      LaurentSeries z = C_->embed(x, *valuation(x, C_->place()) + rel0);

      // Gaussian elimination over F_q on the window digit vectors, with the
      // combination of iterates tracked so the dependence yields a monic b.
      struct Row {
        std::vector<FqElem> vec;    // reduced, leading coefficient 1
        size_t pivot;               // index of the leading 1
        std::vector<FqElem> combo;  // b-coefficients producing vec
      };
      std::vector<Row> rows;

      for (long long k = 0; k <= budget; ++k) {
        // Escape test: log|z| > B_T certifies the orbit is unbounded.
        if (!z.is_zero() && z.val() < inv_.nu_B) {
          res.decided = true;
          res.contained = false;
          res.escape_step = k;
          return res;
        }
        // Window digit vector of z (zero iff z lies in phi^0).
        std::vector<FqElem> vec;
        vec.reserve(static_cast<size_t>(dim));
        for (long long lvl = inv_.nu_B; lvl < inv_.nu_rho; ++lvl) {
          PolyA digit = z.digit(lvl);
          for (int c = 0; c < inv_.d; ++c) vec.push_back(digit.coeff(c));
        }
        std::vector<FqElem> combo(static_cast<size_t>(k) + 1, FqElem::zero(F));
        combo.back() = FqElem::one(F);
        for (const Row& row : rows) {
          if (vec[row.pivot].is_zero()) continue;
          FqElem mu = vec[row.pivot];
          for (size_t j = 0; j < vec.size(); ++j)
            vec[j] = vec[j] - mu * row.vec[j];
          for (size_t j = 0; j < row.combo.size(); ++j)
            combo[j] = combo[j] - mu * row.combo[j];
        }
        size_t pivot = vec.size();
        for (size_t j = 0; j < vec.size(); ++j)
          if (!vec[j].is_zero()) {
            pivot = j;
            break;
          }
        if (pivot == vec.size()) {
          // Dependence: sum combo_i phi_{T^i}(x) has all window digits zero,
          // hence lies in phi^0; combo_k = 1 keeps the witness monic.
          res.decided = true;
          res.contained = true;
          res.witness = PolyA(F, std::move(combo));
          return res;
        }
        FqElem inv_lead = vec[pivot].inv();
        for (size_t j = 0; j < vec.size(); ++j) vec[j] = vec[j] * inv_lead;
        for (size_t j = 0; j < combo.size(); ++j)
          combo[j] = combo[j] * inv_lead;
        rows.push_back(Row{std::move(vec), pivot, std::move(combo)});

        if (k < budget) z = iterate_step(pT, z);
      }
      res.decided = false;  // budget exhausted without escape or dependence
      return res;
    } catch (const Error& e) {
      if (e.code() != Err::PrecisionExhausted || attempt >= 3) throw;
      rel0 *= 2;
    }
  }
}

LaurentSeries LocalModule::iterate_step(const std::vector<LaurentSeries>& cs,
                                        const LaurentSeries& z) const {
  LaurentSeries acc = cs[0] * z;
  for (size_t i = 1; i < cs.size(); ++i)
    acc = acc + cs[i] * z.frobenius_power(static_cast<long long>(i));
  return acc;
}

Rat LocalModule::local_height(const RatFunc& x) const {
  require(!x.is_zero(), Err::ZeroArgument, "local height of the zero point");
  return Rat(*valuation(x, C_->place()) * inv_.d) + inv_.c_v;
}

LocalModule::HeightParts LocalModule::decompose_height(const RatFunc& x) const {
  Rat lambda = local_height(x);
  if (!in_phi0(x)) return HeightParts{lambda, lambda, Rat(0)};
  Rat excess = lambda - inv_.j_v;
  require(!(excess < Rat(0)), Err::InvariantViolation,
          "phi^0 point with local height below j_v");
  return HeightParts{lambda, inv_.j_v, excess};
}

bool LocalModule::is_generic(const PolyA& a, const RatFunc& x) const {
  if (x.is_zero()) return true;
  require(!a.is_zero(), Err::ZeroArgument, "genericity undefined for a = 0");
  const FqCtx* F = phi_.field();
  const Place& v = C_->place();
  long long vx = *valuation(x, v);
  require(vx < (1LL << 20) && vx > -(1LL << 20), Err::Overflow,
          "point valuation out of supported range");
  TwistedPoly pa = phi_.phi(a);
  long long best = LLONG_MAX;
  for (int i = 0; i <= pa.deg(); ++i) {
    if (pa.coeff(i).is_zero()) continue;
    long long term = *valuation(pa.coeff(i), v) + q_pow(F->q, i) * vx;
    best = std::min(best, term);
  }
  RatFunc y = phi_.phi_eval(a, x);
  if (y.is_zero()) return false;  // total cancellation
  return *valuation(y, v) == best;
}

bool LocalModule::is_T_generic(const RatFunc& x) const {
  return is_generic(PolyA::gen(phi_.field()), x);
}

// ---- component module -----------------------------------------------------

long long LocalModule::component_count_at(const PolyA& a,
                                          long long prec) const {
  const FqCtx* F = phi_.field();
  const long long q = F->q;
  LocalAdditivePoly f = localize(a, prec);

  // sigma0 / d = min_i (m + v(c_i)) / q^i over the coefficients of phi_a;
  // unknown (zero-to-precision) coefficients must not be able to attain the
  // minimum, else the answer is not certified at this precision.
  Rat best(0);
  bool first = true;
  for (size_t i = 0; i < f.a.size(); ++i) {
    if (f.a[i].is_zero()) continue;
    Rat term = (inv_.m + Rat(f.a[i].val())) / Rat(q_pow(q, (long long)i));
    if (first || term < best) best = term;
    first = false;
  }
  require(!first, Err::DegeneratePolynomial, "phi_a has no known coefficients");
  for (size_t i = 0; i < f.a.size(); ++i) {
    if (!f.a[i].is_zero()) continue;
    Rat bound = (inv_.m + Rat(f.a[i].prec())) / Rat(q_pow(q, (long long)i));
    require(!(bound < best), Err::PrecisionExhausted,
            "identity-component radius undecided at this precision");
  }
  long long nu_sigma = (-best).ceil();
  long long nu_eff = std::min(nu_sigma, inv_.nu_rho);
  long long clusters = count_root_prefixes(f, nu_eff, 1 << 16);
  long long extra = std::max<long long>(0, inv_.nu_rho - nu_sigma) *
                    static_cast<long long>(inv_.d);
  long long scale = q_pow(q, extra);
  require(clusters <= (1LL << 40) / scale, Err::Overflow,
          "component count exceeds the supported range");
  return clusters * scale;
}

long long LocalModule::component_count(const PolyA& a) const {
  require(!a.is_zero(), Err::ZeroArgument, "component count for a = 0");
  if (a.deg() == 0) return 1;  // phi_u is a unit scaling: M[u] = 0
  long long prec = 48 + 8 * static_cast<long long>(a.deg());
  for (int attempt = 0;; ++attempt) {
    try {
      return component_count_at(a, prec);
    } catch (const Error& e) {
      if (e.code() != Err::PrecisionExhausted || attempt >= 4) throw;
      prec *= 2;
    }
  }
}

long long LocalModule::component_size_bound_exponent() const {
  const long long vj = inv_.vj, s = inv_.s;
  return (vj * s + 2 * s + 1) * (vj + 2) * s;
}

bool LocalModule::component_size_within_bound(long long size_log_q) const {
  long long E = component_size_bound_exponent();
  // q^size <= 2 q^E  <=>  size <= E, or size = E + 1 when q = 2.
  return size_log_q <= E ||
         (phi_.field()->q == 2 && size_log_q == E + 1);
}

long long LocalModule::annihilator_budget() const {
  long long window =
      std::max<long long>(0, inv_.nu_rho - inv_.nu_B) * inv_.d;
  long long vjb = component_size_bound_exponent() + 1;  // ceil(log_q 2) <= 1
  return std::min(window, vjb);
}

LocalModule::ComponentModule LocalModule::component_module(
    long long budget_deg) const {
  const FqCtx* F = phi_.field();
  ComponentModule out{{}, PolyA::one(F), 0, true, 0};
  out.budget_deg = budget_deg < 0 ? annihilator_budget() : budget_deg;
  if (out.budget_deg <= 0) {
    // An empty digit window forces M = 0; a caller-imposed zero budget on a
    // nonempty window is an honest cutoff instead.
    long long window =
        std::max<long long>(0, inv_.nu_rho - inv_.nu_B) * inv_.d;
    out.complete = budget_deg < 0 || window == 0;
    return out;
  }

  struct PrimePart {
    PolyA p;
    std::vector<long long> exps;  // descending exponents e_1 >= e_2 >= ...
  };
  std::vector<PrimePart> parts;

  for (int dp = 1; dp <= out.budget_deg; ++dp) {
    for (const PolyA& p : monic_irreducibles(F, dp)) {
      long long t1 = component_count(p);
      if (t1 == 1) continue;
      std::vector<long long> u;  // u_k = log_q #M[p^k] / deg p
      long long prev = 0;
      PolyA pk = p;
      bool stabilized = false;
      for (long long k = 1;; ++k) {
        long long tk = (k == 1) ? t1 : component_count(pk);
        long long lg = ilog_q(tk, F->q, Err::InvariantViolation,
                              "component count is not a q-power");
        require(lg % dp == 0, Err::InvariantViolation,
                "component count is not a residue-size power");
        long long uk = lg / dp;
        require(uk >= prev, Err::InvariantViolation,
                "component counts decreased along p-powers");
        if (uk == prev) {
          stabilized = true;
          break;
        }
        u.push_back(uk);
        prev = uk;
        if ((k + 1) * dp > out.budget_deg + dp) break;  // cannot verify deeper
        pk = pk * p;
      }
      if (!stabilized) out.complete = false;
      // c_k = u_k - u_{k-1} = #{factors with exponent >= k}.
      std::vector<long long> counts;
      for (size_t k = 0; k < u.size(); ++k) {
        long long ck = u[k] - (k == 0 ? 0 : u[k - 1]);
        require(counts.empty() || ck <= counts.back(),
                Err::InvariantViolation, "exponent counts not monotone");
        counts.push_back(ck);
      }
      if (counts.empty()) continue;
      PrimePart part{p, {}};
      for (long long j = 1; j <= counts[0]; ++j) {
        long long e = 0;
        for (long long ck : counts)
          if (ck >= j) ++e;
        part.exps.push_back(e);
      }
      parts.push_back(std::move(part));
    }
  }

  size_t chain = 0;
  for (const auto& part : parts) chain = std::max(chain, part.exps.size());
  std::vector<PolyA> factors;  // descending: factors[0] = largest
  for (size_t j = 0; j < chain; ++j) {
    PolyA dj = PolyA::one(F);
    for (const auto& part : parts)
      if (j < part.exps.size())
        for (long long e = 0; e < part.exps[j]; ++e) dj = dj * part.p;
    factors.push_back(dj);
  }
  if (!factors.empty()) out.annihilator = factors.front();
  out.invariant_factors.assign(factors.rbegin(), factors.rend());
  for (const auto& g : factors) out.size_log_q += g.deg();
  long long window = std::max<long long>(0, inv_.nu_rho - inv_.nu_B) * inv_.d;
  require(out.size_log_q <= window, Err::InvariantViolation,
          "component module exceeds its digit-window bound");
  return out;
}

// ---- generic refinement -----------------------------------------------------

Rat LocalModule::lambda_floor(const PolyA& a) const {
  require(!a.is_zero() && a.deg() >= 1, Err::ConstantArgument,
          "height floor needs a nonconstant multiplier");
  const FqCtx* F = phi_.field();
  const long long q = F->q;
  long long R = static_cast<long long>(phi_.rank()) * a.deg();
  long long qR = q_pow(q, R, 1LL << 20);
  RatFunc ga = gamma_image(a);
  long long vga = *valuation(ga, C_->place());
  Rat log_plus_inv = Rat::max(Rat(0), Rat(vga * inv_.d));
  return (Rat(1) - Rat(1, q)) * inv_.j_v -
         log_plus_inv / Rat(q * (qR - 1) * (qR - 1));
}

LocalModule::RefineResult LocalModule::refine_generic_subgroup(
    const std::vector<RatFunc>& X0, const PolyA& a) const {
  require(!a.is_zero() && a.deg() >= 1, Err::ConstantArgument,
          "refinement needs a nonconstant multiplier");
  const FqCtx* F = phi_.field();
  const long long q = F->q;
  const Place& v = C_->place();

  auto less = [](const RatFunc& x, const RatFunc& y) {
    return ratfunc_less(x, y);
  };
  std::vector<RatFunc> X = X0;
  std::sort(X.begin(), X.end(), less);
  X.erase(std::unique(X.begin(), X.end()), X.end());
  require(!X.empty(), Err::NotASubgroup, "empty point set");

  auto contains = [&](const std::vector<RatFunc>& S, const RatFunc& x) {
    return std::binary_search(S.begin(), S.end(), x, less);
  };
  require(contains(X, RatFunc::zero(F)), Err::NotASubgroup,
          "point set does not contain zero");
  for (const RatFunc& x : X)
    for (long long c = 1; c < q; ++c)
      require(contains(X, x * RatFunc::from_int(F, c)), Err::NotASubgroup,
              "point set not closed under F_q scaling");
  for (const RatFunc& x : X)
    for (const RatFunc& y : X)
      require(contains(X, x + y), Err::NotASubgroup,
              "point set not closed under addition");

  long long dim_X = ilog_q(static_cast<long long>(X.size()), q,
                           Err::NotASubgroup, "subgroup size is not a q-power");
  long long R = static_cast<long long>(phi_.rank()) * a.deg();

  // Class key: valuation and leading residue digit; phi_a-images may vanish.
  auto key_of = [&](const RatFunc& x) -> std::pair<long long, long long> {
    if (x.is_zero()) return {LLONG_MAX, 0};
    long long val = *valuation(x, v);
    LaurentSeries s = C_->embed(x, val + 1);
    return {val, kv_code(s.residue(), q)};
  };
  auto all_generic = [&](const std::vector<RatFunc>& S) {
    for (const RatFunc& x : S)
      if (!x.is_zero() && !is_generic(a, x)) return false;
    return true;
  };
  auto span_of = [&](const std::vector<RatFunc>& gens) {
    std::set<RatFunc, decltype(less)> S(less);
    S.insert(RatFunc::zero(F));
    for (const RatFunc& g : gens) {
      if (S.count(g)) continue;
      std::set<RatFunc, decltype(less)> grown(less);
      for (const RatFunc& s : S)
        for (long long c = 0; c < q; ++c)
          grown.insert(s + g * RatFunc::from_int(F, c));
      S = std::move(grown);
    }
    return std::vector<RatFunc>(S.begin(), S.end());
  };

  std::vector<RatFunc> cur = X;
  for (long long depth = 0; !all_generic(cur); ++depth) {
    require(depth <= 2 * R + 4, Err::InvariantViolation,
            "generic refinement did not stabilize");
    using PairKey = std::tuple<long long, long long, long long, long long>;
    std::map<PairKey, std::vector<RatFunc>> groups;
    for (const RatFunc& x : cur) {
      if (x.is_zero()) continue;
      auto kx = key_of(x);
      auto ky = key_of(phi_.phi_eval(a, x));
      groups[{kx.first, kx.second, ky.first, ky.second}].push_back(x);
    }
    require(!groups.empty(), Err::InvariantViolation,
            "nongeneric refinement step saw no nonzero points");
    const std::vector<RatFunc>* best = nullptr;
    for (const auto& [key, members] : groups)
      if (!best || members.size() > best->size()) best = &members;
    const RatFunc& x0 = best->front();  // members kept in sorted order
    std::vector<RatFunc> gens;
    for (const RatFunc& x : *best) gens.push_back(x - x0);
    cur = span_of(gens);
  }

  RefineResult res;
  res.subgroup = std::move(cur);
  res.lambda_floor = lambda_floor(a);
  res.size_floor_log_q = std::max<long long>(0, dim_X - 4 * R * R);
  return res;
}

}  // namespace djulia
