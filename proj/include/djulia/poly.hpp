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

#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "djulia/fq.hpp"

namespace djulia {

// Dense univariate polynomials over a field type K.  K must provide
// K::Ctx, K::zero/one/from_int, is_zero(), and field operator arithmetic;
// instantiated with FqElem (the ring A = F_q[T]) and with RatFunc (for
// one-parameter families whose coefficients are rational in the parameter).
// The zero polynomial has degree -1 (standing in for degree -infinity).
template <class K>
class Poly {
 public:
  using Ctx = typename K::Ctx;

  explicit Poly(Ctx ctx) : ctx_(ctx) {}
  Poly(Ctx ctx, std::vector<K> coeffs) : ctx_(ctx), c_(std::move(coeffs)) {
    trim();
  }

  static Poly zero(Ctx ctx) { return Poly(ctx); }
  static Poly one(Ctx ctx) { return constant(K::one(ctx)); }
  static Poly constant(const K& k) {
    Poly f(k.context());
    if (!k.is_zero()) f.c_.push_back(k);
    return f;
  }
  // The variable itself.
  static Poly gen(Ctx ctx) {
    Poly f(ctx);
    f.c_ = {K::zero(ctx), K::one(ctx)};
    return f;
  }

  Ctx context() const { return ctx_; }
  int deg() const { return (int)c_.size() - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }

  K coeff(int i) const {
    if (i < 0 || i >= (int)c_.size()) return K::zero(ctx_);
    return c_[i];
  }
  K lead() const {
    require(!is_zero(), Err::ZeroArgument, "leading coeff of zero polynomial");
    return c_.back();
  }
  K constant_term() const { return coeff(0); }
  const std::vector<K>& coeffs() const { return c_; }

  bool is_monic() const { return !is_zero() && c_.back().is_one(); }
  Poly monic() const {
    if (is_zero() || is_monic()) return *this;
    return *this * K::one(ctx_) / c_.back();
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r(a.ctx_);
    r.c_.resize(std::max(a.c_.size(), b.c_.size()), K::zero(a.ctx_));
    for (size_t i = 0; i < r.c_.size(); ++i)
      r.c_[i] = a.coeff((int)i) + b.coeff((int)i);
    r.trim();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  Poly operator-() const {
    Poly r(ctx_);
    r.c_.reserve(c_.size());
    for (const K& k : c_) r.c_.push_back(-k);
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly(a.ctx_);
    Poly r(a.ctx_);
    r.c_.assign(a.c_.size() + b.c_.size() - 1, K::zero(a.ctx_));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j)
        r.c_[i + j] = r.c_[i + j] + a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
  }
  friend Poly operator*(const Poly& a, const K& k) {
    Poly r(a.ctx_);
    if (k.is_zero()) return r;
    r.c_.reserve(a.c_.size());
    for (const K& c : a.c_) r.c_.push_back(c * k);
    r.trim();
    return r;
  }
  friend Poly operator/(const Poly& a, const K& k) {
    require(!k.is_zero(), Err::ZeroArgument, "polynomial divided by zero scalar");
    Poly r(a.ctx_);
    r.c_.reserve(a.c_.size());
    for (const K& c : a.c_) r.c_.push_back(c / k);
    return r;
  }

  // Quotient and remainder; b must be nonzero.
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require(!b.is_zero(), Err::ZeroArgument, "polynomial division by zero");
    Poly q(a.ctx_), r = a;
    if (r.deg() < b.deg()) return {q, r};
    q.c_.assign(r.deg() - b.deg() + 1, K::zero(a.ctx_));
    K lead_inv = K::one(a.ctx_) / b.lead();
    while (!r.is_zero() && r.deg() >= b.deg()) {
      int k = r.deg() - b.deg();
      K f = r.lead() * lead_inv;
      q.c_[k] = f;
      for (int i = 0; i <= b.deg(); ++i)
        r.c_[k + i] = r.c_[k + i] - f * b.c_[i];
      r.trim();
    }
    q.trim();
    return {q, r};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!(a.c_[i] == b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Monic gcd.
  friend Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
      Poly r = a % b;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  template <class V>
  V eval(const V& x) const {
    V acc = V::zero(x.context());
    for (int i = deg(); i >= 0; --i) acc = acc * x + V::from(c_[i]);
    return acc;
  }
  K operator()(const K& x) const {
    K acc = K::zero(ctx_);
    for (int i = deg(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    Poly r(ctx_);
    for (int i = 1; i <= deg(); ++i)
      r.c_.push_back(c_[i] * K::from_int(ctx_, i));
    r.trim();
    return r;
  }

  Poly shifted(int k) const {  // multiply by var^k
    if (is_zero()) return *this;
    Poly r(ctx_);
    r.c_.assign(c_.size() + k, K::zero(ctx_));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
  }
  Poly truncated(int n) const {  // coefficients below var^n
    Poly r(ctx_);
    r.c_.assign(c_.begin(), c_.begin() + std::min<size_t>(c_.size(), n));
    r.trim();
    return r;
  }
  Poly reversed() const {  // var^deg * f(1/var)
    Poly r(ctx_);
    r.c_.assign(c_.rbegin(), c_.rend());
    r.trim();
    return r;
  }

  friend Poly powmod(Poly base, long long n, const Poly& mod) {
    Poly r = Poly::one(base.ctx_) % mod;
    base = base % mod;
    while (n > 0) {
      if (n & 1) r = (r * base) % mod;
      base = (base * base) % mod;
      n >>= 1;
    }
    return r;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  Ctx ctx_;
  std::vector<K> c_;
};

using PolyA = Poly<FqElem>;  // the ring A = F_q[T]

// --- PolyA-specific utilities (definitions in poly.cpp) ---

// Deterministic total order: degree first, then coefficient codes compared
// from the top down.  Used to sort places and factorizations.
bool poly_less(const PolyA& a, const PolyA& b);

// Encode / decode a monic polynomial of degree d by the integer whose base-q
// digits are the low coefficients' codes (enumeration order for places).
PolyA monic_from_code(const FqCtx* F, int d, long long code);

bool is_irreducible(const PolyA& f);

// All monic irreducibles of degree exactly d, in poly_less order.
std::vector<PolyA> monic_irreducibles(const FqCtx* F, int d);

// Multiplicity of the exact p-adic valuation ord_g(f) (g nonconstant).
int poly_ord(const PolyA& f, const PolyA& g);

// Extended Euclid: returns (g, s, u) with s*a + u*b = g and g = gcd(a, b)
// monic (or zero when both inputs are zero).
std::tuple<PolyA, PolyA, PolyA> poly_ext_gcd(const PolyA& a, const PolyA& b);

// Full factorization into monic irreducibles (sorted) with multiplicities;
// the leading unit is dropped.
std::vector<std::pair<PolyA, int>> factor(const PolyA& f);

// f assumed of the form g(T)^p in char p; returns g.
PolyA poly_pth_root(const PolyA& f);

// Frobenius on coefficients together with exponent dilation: f(T)^(p^k)
// computed digitwise (free in char p).
PolyA poly_frobenius_power(const PolyA& f, int k);

std::string poly_str(const PolyA& f, const std::string& var = "t");

}  // namespace djulia
