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

// Skew polynomial sum c_i tau^i over L = F_q(t), where tau is the q-power
// Frobenius; multiplication twists the right factor: tau * c = c^q * tau.
class TwistedPoly {
 public:
  TwistedPoly(const FqCtx* F, std::vector<RatFunc> c)
      : F_(F), c_(std::move(c)) {
    trim();
  }
  static TwistedPoly zero(const FqCtx* F) { return TwistedPoly(F, {}); }
  static TwistedPoly constant(RatFunc c) {
    const FqCtx* F = c.context();
    return TwistedPoly(F, {std::move(c)});
  }

  const FqCtx* context() const { return F_; }
  bool is_zero() const { return c_.empty(); }
  int deg() const { return static_cast<int>(c_.size()) - 1; }  // -1 when zero
  RatFunc coeff(int i) const {
    if (i < 0 || i > deg()) return RatFunc::zero(F_);
    return c_[i];
  }

  friend TwistedPoly operator+(const TwistedPoly& a, const TwistedPoly& b);
  friend TwistedPoly operator*(const TwistedPoly& a, const TwistedPoly& b);
  friend bool operator==(const TwistedPoly& a, const TwistedPoly& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const TwistedPoly& a, const TwistedPoly& b) {
    return !(a == b);
  }

  // The additive map x -> sum c_i x^(q^i), evaluated exactly in L.
  RatFunc eval(const RatFunc& x) const;

  std::string str() const;  // as an additive polynomial in x

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  const FqCtx* F_;
  std::vector<RatFunc> c_;
};

// Drinfeld F_q[T]-module over L = F_q(t) with the standard base point
// gamma(T) = t: determined by phi_T = t + a_1 tau + ... + a_r tau^r.
class DrinfeldModule {
 public:
  // coeffs = (a_1, ..., a_r); a_r must be nonzero.
  DrinfeldModule(const FqCtx* F, std::vector<RatFunc> coeffs);

  const FqCtx* field() const { return F_; }
  int rank() const { return static_cast<int>(a_.size()) - 1; }
  // i in [0, rank]; coeff(0) = t.
  const RatFunc& coeff(int i) const { return a_[static_cast<size_t>(i)]; }

  TwistedPoly phi_T() const { return TwistedPoly(F_, a_); }
  // phi_a for a in A = F_q[T], by Horner in the twisted ring.
  TwistedPoly phi(const PolyA& a) const;
  // phi_a(x) exactly in L, iterating phi_T on x (cheaper than expanding
  // phi_a when only the value is needed).
  RatFunc phi_eval(const PolyA& a, const RatFunc& x) const;

  // [a_1 : ... : a_r] with weight q^i - 1 on the i-th coordinate; twists
  // act by alpha^(q^i - 1), so this point is the twist invariant.
  WeightedPoint j_invariant() const;
  Rat j_height() const { return j_invariant().height(); }

  // Conjugate module with coefficients alpha^(q^i - 1) a_i.
  DrinfeldModule twist(const RatFunc& alpha) const;

  bool operator==(const DrinfeldModule& o) const { return a_ == o.a_; }

  std::string str() const;

 private:
  const FqCtx* F_;
  std::vector<RatFunc> a_;  // a_[0] = t
};

// Structure morphism gamma: A -> L, T -> t (substitute t for T).
RatFunc gamma_image(const PolyA& a);

// Module description file: `q = <prime power>`, `rank = <r>`,
// `coeffs = [a_1, ..., a_r]` (expressions in t), one per line, with
// '#' comments.  Returns the parsed module.
DrinfeldModule parse_module_file(const std::string& path);
DrinfeldModule parse_module_text(const std::string& text);

}  // namespace djulia
