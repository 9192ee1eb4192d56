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

#include <string>
#include <utility>

#include "djulia/poly.hpp"

namespace djulia {

// The rational function field L = F_q(t), held in lowest terms with a monic
// denominator.  This is both the base field of every Drinfeld module here
// and a coefficient field for the one-parameter family layer (it satisfies
// the same field concept Poly<K> expects of its coefficients).
class RatFunc {
 public:
  using Ctx = const FqCtx*;

  explicit RatFunc(Ctx ctx)
      : num_(PolyA::zero(ctx)), den_(PolyA::one(ctx)) {}
  RatFunc(PolyA num, PolyA den) : num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }
  explicit RatFunc(PolyA num) : num_(std::move(num)), den_(PolyA::one(num_.context())) {}

  static RatFunc zero(Ctx ctx) { return RatFunc(ctx); }
  static RatFunc one(Ctx ctx) { return RatFunc(PolyA::one(ctx)); }
  static RatFunc from_int(Ctx ctx, long long n) {
    return RatFunc(PolyA::constant(fq_int(ctx, n)));
  }
  static RatFunc from(const FqElem& c) { return RatFunc(PolyA::constant(c)); }
  static RatFunc gen(Ctx ctx) { return RatFunc(PolyA::gen(ctx)); }

  Ctx context() const { return num_.context(); }
  const PolyA& num() const { return num_; }
  const PolyA& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_polynomial() const { return den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_one(); }

  friend RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    require(!b.is_zero(), Err::ZeroArgument, "division by zero in F_q(t)");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
  }
  RatFunc operator-() const {
    RatFunc r = *this;
    r.num_ = -r.num_;
    return r;
  }
  RatFunc inv() const { return one(context()) / *this; }

  RatFunc pow(long long n) const {
    if (n < 0) return inv().pow(-n);
    RatFunc acc = one(context()), base = *this;
    while (n > 0) {
      if (n & 1) acc = acc * base;
      base = base * base;
      n >>= 1;
    }
    return acc;
  }

  // x^(p^k): numerator and denominator are powered digitwise (Frobenius),
  // which keeps q^i-th powers of rationals linear-time in the output size.
  RatFunc frobenius_power(int k) const {
    return RatFunc(poly_frobenius_power(num_, k), poly_frobenius_power(den_, k));
  }

  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RatFunc& a, const RatFunc& b) { return !(a == b); }

  std::string str(const std::string& var = "t") const {
    if (is_polynomial()) return poly_str(num_, var);
    std::string n = poly_str(num_, var);
    if (num_.deg() > 0) n = "(" + n + ")";
    std::string d = poly_str(den_, var);
    if (den_.deg() > 0) d = "(" + d + ")";
    return n + "/" + d;
  }

 private:
  void normalize() {
    require(!den_.is_zero(), Err::ZeroArgument, "zero denominator in F_q(t)");
    if (num_.is_zero()) {
      den_ = PolyA::one(num_.context());
      return;
    }
    PolyA g = gcd(num_, den_);
    if (g.deg() > 0) {
      num_ = num_ / g;
      den_ = den_ / g;
    }
    FqElem lead = den_.lead();
    if (!lead.is_one()) {
      num_ = num_ / lead;
      den_ = den_ / lead;
    }
  }

  PolyA num_, den_;
};

// Total order for use in sorted containers (degree pair, then coefficients).
inline bool ratfunc_less(const RatFunc& a, const RatFunc& b) {
  if (a.den() != b.den()) return poly_less(a.den(), b.den());
  return poly_less(a.num(), b.num());
}

}  // namespace djulia
