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

#include "djulia/localfield.hpp"

#include <algorithm>
#include <sstream>

namespace djulia {

namespace {

// Absolute-precision values are saturated here so that precision floors of
// certified zeros (which get multiplied by Frobenius powers) cannot
// overflow.  Any real computation works at precisions far below this.
constexpr long long kPrecSat = 1LL << 44;

long long sat_prec(__int128 v) {
  return v > kPrecSat ? kPrecSat : static_cast<long long>(v);
}

}  // namespace

LocalContext::LocalContext(Place v)
    : F_(v.field()), v_(std::move(v)),
      p_(v_.is_infinite() ? PolyA::gen(F_) : v_.prime()),
      d_(v_.deg()) {}

long long LocalContext::residue_order() const {
  long long n = 1;
  for (int i = 0; i < d_; ++i) {
    require(n <= (1LL << 40), Err::Overflow, "residue field too large");
    n *= F_->q;
  }
  return n;
}

PolyA LocalContext::kv_inv(const PolyA& a) const {
  PolyA r = kv_reduce(a);
  require(!r.is_zero(), Err::ZeroArgument, "inverse of zero in residue field");
  auto [g, s, u] = poly_ext_gcd(r, p_);
  (void)u;
  require(g.deg() == 0, Err::InvariantViolation, "residue inverse failed");
  return kv_reduce(s / g.lead());
}

PolyA LocalContext::kv_pow(const PolyA& a, long long n) const {
  if (n < 0) return kv_pow(kv_inv(a), -n);
  return powmod(kv_reduce(a), n, p_);
}

PolyA LocalContext::kv_frobenius(const PolyA& a, long long k) const {
  k %= d_;
  if (k < 0) k += d_;
  PolyA r = kv_reduce(a);
  for (long long i = 0; i < k; ++i) r = powmod(r, F_->q, p_);
  return r;
}

PolyA LocalContext::kv_pth_root(const PolyA& a) const {
  // |k_v| = p^(e*d), so x -> x^p has inverse x -> x^(p^(e*d - 1)).
  PolyA r = kv_reduce(a);
  for (int i = 0; i < F_->e * d_ - 1; ++i) r = powmod(r, F_->p, p_);
  return r;
}

std::vector<PolyA> LocalContext::kv_elements() const {
  long long n = residue_order();
  std::vector<PolyA> out;
  out.reserve(static_cast<size_t>(n));
  for (long long code = 0; code < n; ++code) {
    // Base-q digits of code are the coefficients.
    std::vector<FqElem> c;
    long long rest = code;
    for (int i = 0; i < d_; ++i) {
      c.push_back(FqElem(F_, static_cast<int>(rest % F_->q)));
      rest /= F_->q;
    }
    out.push_back(PolyA(F_, std::move(c)));
  }
  return out;
}

PolyA LocalContext::prime_power(long long n) const {
  require(n >= 0, Err::ZeroArgument, "negative prime power");
  require(n * d_ <= 2'000'000, Err::Overflow, "prime power degree too large");
  PolyA acc = PolyA::one(F_), base = p_;
  long long e = n;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

RatFunc LocalContext::transform(const RatFunc& x) const {
  if (!is_infinite() || x.is_zero()) return x;
  // x(1/s) = rev(num)(s) / rev(den)(s) * s^(deg den - deg num).
  RatFunc y(x.num().reversed(), x.den().reversed());
  return y * RatFunc::gen(F_).pow(x.den().deg() - x.num().deg());
}

LaurentSeries LocalContext::zero(long long prec) const {
  return LaurentSeries(this, prec, PolyA::zero(F_), 0);
}

LaurentSeries LocalContext::one(long long rel_prec) const {
  return make(0, PolyA::one(F_), rel_prec);
}

LaurentSeries LocalContext::pi(long long rel) const {
  return make(1, PolyA::one(F_), rel);
}

LaurentSeries LocalContext::make(long long off, PolyA u, long long rel) const {
  require(rel >= 0, Err::PrecisionExhausted, "nonpositive relative precision");
  if (rel == 0) return zero(off);
  u = u % prime_power(rel);
  if (u.is_zero()) return zero(off + rel);
  long long shift = poly_ord(u, p_);
  if (shift > 0) {
    u = u / prime_power(shift);
    off += shift;
    rel -= shift;
    u = u % prime_power(rel);
    if (u.is_zero() || rel <= 0) return zero(off + rel);
  }
  return LaurentSeries(this, off, std::move(u), rel);
}

LaurentSeries LocalContext::embed(const RatFunc& x0, long long prec) const {
  RatFunc x = transform(x0);
  if (x.is_zero()) return zero(prec);
  long long a = poly_ord(x.num(), p_);
  long long b = poly_ord(x.den(), p_);
  long long off = a - b;
  if (prec <= off) return zero(prec);
  long long rel = prec - off;
  PolyA n0 = x.num() / prime_power(a);
  PolyA d0 = x.den() / prime_power(b);
  PolyA mod = prime_power(rel);
  auto [g, s, u] = poly_ext_gcd(d0 % mod, mod);
  (void)u;
  require(g.deg() == 0, Err::InvariantViolation,
          "denominator not a unit at the place");
  PolyA inv = (s / g.lead()) % mod;
  return make(off, (n0 * inv) % mod, rel);
}

PolyA LaurentSeries::digit(long long i) const {
  if (is_zero()) {
    require(i < off_, Err::PrecisionExhausted, "digit beyond known precision");
    return PolyA::zero(C_->field());
  }
  require(i < prec(), Err::PrecisionExhausted, "digit beyond known precision");
  if (i < off_) return PolyA::zero(C_->field());
  PolyA q = u_ / C_->prime_power(i - off_);
  return q % C_->prime();
}

LaurentSeries LaurentSeries::truncate(long long new_prec) const {
  if (new_prec >= prec()) return *this;
  return C_->make(off_, u_, new_prec - off_);
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  require(a.C_ == b.C_, Err::InvariantViolation, "mixed local contexts");
  const LocalContext* C = a.C_;
  long long prec = std::min(a.prec(), b.prec());
  long long off = std::min(a.is_zero() ? prec : a.off_,
                           b.is_zero() ? prec : b.off_);
  if (off >= prec) return C->zero(prec);
  PolyA s = PolyA::zero(C->field());
  if (!a.is_zero() && a.off_ < prec)
    s = s + a.u_ * C->prime_power(a.off_ - off);
  if (!b.is_zero() && b.off_ < prec)
    s = s + b.u_ * C->prime_power(b.off_ - off);
  return C->make(off, std::move(s), prec - off);
}

LaurentSeries operator-(const LaurentSeries& a) {
  return LaurentSeries(a.C_, a.off_, -a.u_, a.rel_);
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  require(a.C_ == b.C_, Err::InvariantViolation, "mixed local contexts");
  const LocalContext* C = a.C_;
  if (a.is_zero() || b.is_zero()) {
    // off_ holds the valuation of a nonzero factor and the precision floor
    // of a certified zero; either way the product is O(pi^(sum)).
    return C->zero(sat_prec(static_cast<__int128>(a.off_) + b.off_));
  }
  long long rel = std::min(a.rel_, b.rel_);
  PolyA u = (a.u_ * b.u_) % C->prime_power(rel);
  return C->make(a.off_ + b.off_, std::move(u), rel);
}

LaurentSeries LaurentSeries::inv() const {
  require(!is_zero(), Err::PrecisionExhausted,
          "inverse of an element that is zero to working precision");
  PolyA mod = C_->prime_power(rel_);
  auto [g, s, t] = poly_ext_gcd(u_ % mod, mod);
  (void)t;
  require(g.deg() == 0, Err::InvariantViolation, "unit inversion failed");
  return C_->make(-off_, (s / g.lead()) % mod, rel_);
}

LaurentSeries LaurentSeries::pow(long long n) const {
  if (n < 0) return inv().pow(-n);
  if (n == 0) return C_->one(is_zero() ? 1 : rel_);
  LaurentSeries acc = C_->one(is_zero() ? 1 : rel_);
  LaurentSeries base = *this;
  while (n > 0) {
    if (n & 1) acc = acc * base;
    if (n >>= 1) base = base * base;
  }
  return acc;
}

LaurentSeries LaurentSeries::frobenius_power(long long k) const {
  require(k >= 0, Err::ZeroArgument, "negative Frobenius power");
  long long qk = 1;
  for (long long i = 0; i < k; ++i) {
    qk *= C_->field()->q;
    require(qk < (1LL << 40), Err::Overflow, "Frobenius power overflow");
  }
  if (is_zero()) return C_->zero(sat_prec(static_cast<__int128>(off_) * qk));
  // (pi^off u)^(q^k) = pi^(off q^k) u^(q^k); relative precision is
  // preserved (it actually improves, but the improved digits are not
  // materialized to keep degrees bounded).
  PolyA mod = C_->prime_power(rel_);
  PolyA u = u_ % mod;
  for (long long i = 0; i < k; ++i) u = powmod(u, C_->field()->q, mod);
  return C_->make(off_ * qk, std::move(u), rel_);
}

std::string LaurentSeries::str() const {
  bool inf = C_->is_infinite();
  auto pi_pow = [&](long long i) -> std::string {
    long long e = inf ? -i : i;
    std::string base =
        inf ? "t" : (C_->deg() == 1 ? poly_str(C_->prime()) : "pi");
    std::string b = base.size() > 1 ? "(" + base + ")" : base;
    return e == 1 ? b : b + "^" + std::to_string(e);
  };
  std::ostringstream os;
  bool first = true;
  if (!is_zero()) {
    for (long long i = off_; i < prec(); ++i) {
      PolyA c = digit(i);
      if (c.is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      std::string cs = poly_str(c);
      if (i == 0) {
        os << cs;
        continue;
      }
      if (cs == "1") {
        os << pi_pow(i);
      } else {
        if (c.deg() > 0) cs = "(" + cs + ")";
        os << cs << "*" << pi_pow(i);
      }
    }
  }
  if (!first) os << " + ";
  os << "O(" << pi_pow(prec()) << ")";
  return os.str();
}

}  // namespace djulia
