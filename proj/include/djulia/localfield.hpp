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
#include <vector>

#include "djulia/places.hpp"

namespace djulia {

class LaurentSeries;

// Completion of L = F_q(t) at a place v.  For finite v with uniformizer
// p(t) the completion is k_v((pi)) with pi = p(t); elements are handled as
// polynomial approximations mod p^N.  The infinite place is mapped to the
// place (s) of F_q(s) under t -> 1/s, so the same finite-place machinery
// serves both (with pi = 1/t from the caller's point of view).
class LocalContext {
 public:
  explicit LocalContext(Place v);

  const FqCtx* field() const { return F_; }
  const Place& place() const { return v_; }
  bool is_infinite() const { return v_.is_infinite(); }
  // Uniformizer as a polynomial in the working variable.
  const PolyA& prime() const { return p_; }
  int deg() const { return d_; }  // residue degree [k_v : F_q]
  long long residue_order() const;  // q^d, guarded against overflow

  // --- residue field k_v = F_q[t]/(p), elements as PolyA of degree < d ---
  PolyA kv_reduce(const PolyA& a) const { return a % p_; }
  PolyA kv_zero() const { return PolyA::zero(F_); }
  PolyA kv_one() const { return PolyA::one(F_); }
  PolyA kv_add(const PolyA& a, const PolyA& b) const { return a + b; }
  PolyA kv_mul(const PolyA& a, const PolyA& b) const { return (a * b) % p_; }
  PolyA kv_inv(const PolyA& a) const;
  PolyA kv_pow(const PolyA& a, long long n) const;  // n may be negative
  // a^(q^k); Frobenius has order d on k_v, so k is taken mod d.
  PolyA kv_frobenius(const PolyA& a, long long k) const;
  // Unique p-th root in the perfect field k_v.
  PolyA kv_pth_root(const PolyA& a) const;
  // All q^d elements, in poly_less order starting from 0.
  std::vector<PolyA> kv_elements() const;

  // --- series construction ---
  // x known exactly; returned with absolute precision prec (x = value +
  // O(pi^prec)).  Requires prec > v(x) unless x = 0.
  LaurentSeries embed(const RatFunc& x, long long prec) const;
  LaurentSeries zero(long long prec) const;
  LaurentSeries one(long long rel_prec) const;
  // pi^off * u + O(pi^(off+rel)); u is reduced mod p^rel and p-powers are
  // folded into off.
  LaurentSeries make(long long off, PolyA u, long long rel) const;
  // Uniformizer pi with relative precision rel.
  LaurentSeries pi(long long rel) const;

  PolyA prime_power(long long n) const;  // p^n

 private:
  RatFunc transform(const RatFunc& x) const;  // t -> 1/s at infinity

  const FqCtx* F_;
  Place v_;
  PolyA p_;
  int d_;
};

// Element of the completion, stored as x = pi^off * u + O(pi^(off+rel))
// with u a polynomial of degree < d*rel not divisible by p (unless x is
// zero to the working precision, in which case u = 0 and rel = 0, so off
// records the absolute precision).  All arithmetic tracks precision: an
// operation that cannot certify its result raises PrecisionExhausted.
class LaurentSeries {
 public:
  const LocalContext* context() const { return C_; }
  bool is_zero() const { return u_.is_zero(); }  // zero to known precision
  // Valuation; exact for nonzero elements.  For a zero-to-precision element
  // only the lower bound prec() is known, so val() refuses.
  long long val() const {
    require(!is_zero(), Err::PrecisionExhausted,
            "valuation of an element that is zero to working precision");
    return off_;
  }
  long long prec() const { return off_ + rel_; }      // absolute precision
  long long rel_prec() const { return rel_; }
  const PolyA& unit() const { return u_; }
  // log|x|_v in units of log q (uses the residue degree of the place).
  Rat log_abs() const { return Rat(-val() * C_->deg()); }

  // Certified "v(x) >= n" test; raises PrecisionExhausted when the stored
  // precision cannot decide.
  bool val_at_least(long long n) const {
    if (is_zero()) {
      require(off_ >= n, Err::PrecisionExhausted,
              "zero only certified to lower precision");
      return true;
    }
    return off_ >= n;
  }

  // Digit c_i of the pi-adic expansion x = sum c_i pi^i (deg c_i < d);
  // zero for i < val, PrecisionExhausted for i >= prec.
  PolyA digit(long long i) const;
  // Leading residue u mod p (nonzero for nonzero x).
  PolyA residue() const {
    require(!is_zero(), Err::ZeroArgument, "residue of (certified) zero");
    return u_ % C_->prime();
  }

  LaurentSeries truncate(long long new_prec) const;

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
  friend LaurentSeries operator-(const LaurentSeries& a);
  friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) {
    return a + (-b);
  }
  friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
  LaurentSeries inv() const;
  friend LaurentSeries operator/(const LaurentSeries& a, const LaurentSeries& b) {
    return a * b.inv();
  }
  LaurentSeries pow(long long n) const;
  // x^(q^k); exponentiation by the field Frobenius is exact on the unit
  // part and multiplies the valuation by q^k.
  LaurentSeries frobenius_power(long long k) const;

  // Equality to the shared precision.
  friend bool eq_to_prec(const LaurentSeries& a, const LaurentSeries& b) {
    return (a - b).is_zero();
  }

  std::string str() const;

 private:
  friend class LocalContext;
  LaurentSeries(const LocalContext* C, long long off, PolyA u, long long rel)
      : C_(C), off_(off), u_(std::move(u)), rel_(rel) {}

  const LocalContext* C_;
  long long off_;
  PolyA u_;
  long long rel_;
};

}  // namespace djulia
