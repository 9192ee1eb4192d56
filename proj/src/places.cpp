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

#include "djulia/places.hpp"

#include <algorithm>
#include <set>

namespace djulia {

std::optional<long long> valuation(const RatFunc& x, const Place& v) {
  if (x.is_zero()) return std::nullopt;
  if (v.is_infinite()) return (long long)x.den().deg() - x.num().deg();
  // num and den are coprime, so at most one of the two valuations is nonzero.
  int vn = poly_ord(x.num(), v.prime());
  if (vn > 0) return vn;
  return -poly_ord(x.den(), v.prime());
}

Rat log_abs(const RatFunc& x, const Place& v) {
  auto val = valuation(x, v);
  require(val.has_value(), Err::ZeroArgument, "log|0| is undefined");
  return Rat(-*val * (long long)v.deg());
}

std::vector<Place> support(const RatFunc& x) {
  require(!x.is_zero(), Err::ZeroArgument, "support of zero");
  std::vector<Place> out;
  for (const auto& [p, m] : factor(x.num())) {
    (void)m;
    out.push_back(Place::finite(p));
  }
  for (const auto& [p, m] : factor(x.den())) {
    (void)m;
    out.push_back(Place::finite(p));
  }
  if (x.num().deg() != x.den().deg()) out.push_back(Place::infinite(x.context()));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool product_formula_check(const RatFunc& x) {
  Rat total(0);
  for (const Place& v : support(x)) total += log_abs(x, v);
  return total.is_zero();
}

Rat height(const RatFunc& x) {
  if (x.is_zero()) return Rat(0);
  Rat h(0);
  for (const Place& v : support(x)) h += log_abs(x, v).clamp_nonneg();
  return h;
}

std::vector<Place> enumerate_places(const FqCtx* F, int max_deg) {
  std::vector<Place> out;
  out.push_back(Place::infinite(F));
  for (int d = 1; d <= max_deg; ++d)
    for (const PolyA& p : monic_irreducibles(F, d))
      out.push_back(Place::finite(p));
  return out;
}

std::vector<RatFunc> enumerate_elements(const FqCtx* F, long long max_h) {
  require(max_h >= 0, Err::NTooSmall, "height bound must be nonnegative");
  require(max_h <= 24, Err::BudgetExceeded, "height bound too large to list");
  // All polynomials of degree <= d, in code order (zero first).
  auto polys = [&](long long d) {
    std::vector<PolyA> out;
    long long count = 1;
    for (long long i = 0; i <= d; ++i) {
      count *= F->q;
      require(count <= (1LL << 40), Err::BudgetExceeded,
              "too many numerators to list");
    }
    for (long long code = 0; code < count; ++code) {
      long long c = code;
      std::vector<FqElem> cs;
      for (long long i = 0; i <= d; ++i) {
        cs.push_back(FqElem(F, static_cast<int>(c % F->q)));
        c /= F->q;
      }
      out.emplace_back(F, std::move(cs));
    }
    return out;
  };
  std::vector<RatFunc> out;
  out.push_back(RatFunc::zero(F));
  std::vector<PolyA> nums = polys(max_h);
  for (long long dd = 0; dd <= max_h; ++dd) {
    // Monic denominators of degree exactly dd.
    long long count = 1;
    for (long long i = 0; i < dd; ++i) count *= F->q;
    for (long long code = 0; code < count; ++code) {
      PolyA den = monic_from_code(F, static_cast<int>(dd), code);
      for (const PolyA& num : nums) {
        if (num.is_zero()) continue;
        if (!gcd(num, den).is_one()) continue;
        out.emplace_back(num, den);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const RatFunc& a, const RatFunc& b) {
    Rat ha = height(a), hb = height(b);
    if (ha != hb) return ha < hb;
    return ratfunc_less(a, b);
  });
  return out;
}

WeightedPoint::WeightedPoint(std::vector<RatFunc> coords, std::vector<int> weights)
    : coords_(std::move(coords)), weights_(std::move(weights)) {
  require(coords_.size() == weights_.size() && !coords_.empty(),
          Err::InvariantViolation, "coordinate/weight count mismatch");
  bool nonzero = false;
  for (const RatFunc& c : coords_) nonzero = nonzero || !c.is_zero();
  require(nonzero, Err::ZeroArgument, "all coordinates zero");
  for (int w : weights_)
    require(w >= 1, Err::InvariantViolation, "weights must be positive");
}

Rat WeightedPoint::height() const {
  // Collect the union of the coordinate supports, then sum the per-place max
  // of log|x_i|_v / w_i.  No clamping: the product formula makes the sum
  // invariant under the weighted G_m-action.
  std::set<Place> places;
  for (const RatFunc& c : coords_)
    if (!c.is_zero())
      for (const Place& v : support(c)) places.insert(v);
  Rat h(0);
  for (const Place& v : places) {
    bool first = true;
    Rat best(0);
    for (size_t i = 0; i < coords_.size(); ++i) {
      if (coords_[i].is_zero()) continue;
      Rat term = log_abs(coords_[i], v) / Rat(weights_[i]);
      if (first || term > best) { best = term; first = false; }
    }
    h += best;
  }
  return h;
}

bool WeightedPoint::same_point(const WeightedPoint& other) const {
  if (coords_.size() != other.coords_.size()) return false;
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (weights_[i] != other.weights_[i]) return false;
    if (coords_[i].is_zero() != other.coords_[i].is_zero()) return false;
  }
  // Same support; compare the cross-power ratios over all nonzero pairs.
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (coords_[i].is_zero()) continue;
    for (size_t j = i + 1; j < coords_.size(); ++j) {
      if (coords_[j].is_zero()) continue;
      RatFunc lhs = coords_[i].pow(weights_[j]) / coords_[j].pow(weights_[i]);
      RatFunc rhs =
          other.coords_[i].pow(weights_[j]) / other.coords_[j].pow(weights_[i]);
      if (lhs != rhs) return false;
    }
  }
  return true;
}

std::string WeightedPoint::str() const {
  std::string out = "[";
  for (size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += " : ";
    out += coords_[i].str();
  }
  return out + "]";
}

}  // namespace djulia
