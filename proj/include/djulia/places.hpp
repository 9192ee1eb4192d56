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

#include <optional>
#include <string>
#include <vector>

#include "djulia/rational.hpp"
#include "djulia/ratfunc.hpp"

namespace djulia {

// A place of L = F_q(t): either the infinite place (deg = 1) or a monic
// irreducible of F_q[t].  Absolute values are normalized so that
// log|x|_v = -v(x) * deg(v) in units of log q; with that choice the product
// formula over all places sums to zero on the nose.
class Place {
 public:
  static Place infinite(const FqCtx* F) { return Place(F); }
  static Place finite(PolyA prime) {
    require(prime.is_monic(), Err::NotMonic, "place prime must be monic");
    require(is_irreducible(prime), Err::NotIrreducible,
            "place prime must be irreducible: " + poly_str(prime));
    return Place(std::move(prime));
  }

  bool is_infinite() const { return !prime_.has_value(); }
  bool is_finite() const { return prime_.has_value(); }
  int deg() const { return is_infinite() ? 1 : prime_->deg(); }
  const PolyA& prime() const {
    require(is_finite(), Err::InvariantViolation, "infinite place has no prime");
    return *prime_;
  }
  const FqCtx* field() const { return F_; }

  std::string str() const { return is_infinite() ? "inf" : poly_str(*prime_); }

  friend bool operator==(const Place& a, const Place& b) {
    if (a.is_infinite() != b.is_infinite()) return false;
    return a.is_infinite() || *a.prime_ == *b.prime_;
  }
  friend bool operator!=(const Place& a, const Place& b) { return !(a == b); }
  // The infinite place sorts first, then (degree, coefficients).
  friend bool operator<(const Place& a, const Place& b) {
    if (a.is_infinite() != b.is_infinite()) return a.is_infinite();
    if (a.is_infinite()) return false;
    return poly_less(*a.prime_, *b.prime_);
  }

 private:
  explicit Place(const FqCtx* F) : F_(F) {}
  explicit Place(PolyA prime) : F_(prime.context()), prime_(std::move(prime)) {}

  const FqCtx* F_;
  std::optional<PolyA> prime_;
};

// v(x) as an integer; nullopt encodes v(0) = +infinity.
std::optional<long long> valuation(const RatFunc& x, const Place& v);

// log|x|_v = -v(x) deg(v); x must be nonzero.
Rat log_abs(const RatFunc& x, const Place& v);

// Places where v(x) != 0 (x nonzero), sorted; includes the infinite place
// when deg num != deg den.
std::vector<Place> support(const RatFunc& x);

// Exact check of sum_v log|x|_v = 0 over the support.
bool product_formula_check(const RatFunc& x);

// h(x) = sum_v log^+ |x|_v = max(deg num, deg den).
Rat height(const RatFunc& x);

// The infinite place followed by all monic irreducible primes of degree
// <= max_deg, sorted.
std::vector<Place> enumerate_places(const FqCtx* F, int max_deg);

// All x in L with height(x) <= max_h (reduced, monic denominator), sorted
// by height then by ratfunc_less; Northcott makes the list finite.
std::vector<RatFunc> enumerate_elements(const FqCtx* F, long long max_h);

// A point of weighted projective space over L with positive integer weights:
// the G_m-action is u . (x_i) = (u^{w_i} x_i).  Heights are the unclamped
// sum over places of max_i log|x_i|_v / w_i, which the product formula makes
// scaling-invariant; equality is decided by support patterns plus
// cross-power ratios x_i^{w_j} / x_j^{w_i} (over the algebraic closure every
// w-th power is extractable, so these invariants are complete).
class WeightedPoint {
 public:
  WeightedPoint(std::vector<RatFunc> coords, std::vector<int> weights);

  const std::vector<RatFunc>& coords() const { return coords_; }
  const std::vector<int>& weights() const { return weights_; }

  Rat height() const;
  bool same_point(const WeightedPoint& other) const;

  std::string str() const;

 private:
  std::vector<RatFunc> coords_;
  std::vector<int> weights_;
};

}  // namespace djulia
