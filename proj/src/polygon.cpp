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

#include "djulia/polygon.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace djulia {

namespace {

// Cross product (b-a) x (c-a); positive when c lies left of a->b.
__int128 cross(const PolygonPoint& a, const PolygonPoint& b,
               const PolygonPoint& c) {
  return static_cast<__int128>(b.x - a.x) * (c.y - a.y) -
         static_cast<__int128>(b.y - a.y) * (c.x - a.x);
}

}  // namespace

NewtonPolygon NewtonPolygon::from_points(std::vector<PolygonPoint> pts) {
  require(!pts.empty(), Err::DegeneratePolynomial,
          "Newton polygon of an empty coefficient set");
  std::map<long long, long long> best;
  for (const auto& p : pts) {
    auto it = best.find(p.x);
    if (it == best.end() || p.y < it->second) best[p.x] = p.y;
  }
  std::vector<PolygonPoint> sorted;
  sorted.reserve(best.size());
  for (const auto& [x, y] : best) sorted.push_back({x, y});

  NewtonPolygon np;
  // Monotone chain, lower hull only: pop while the middle point is not
  // strictly below the chord.
  for (const auto& p : sorted) {
    while (np.vx_.size() >= 2 &&
           cross(np.vx_[np.vx_.size() - 2], np.vx_.back(), p) <= 0)
      np.vx_.pop_back();
    np.vx_.push_back(p);
  }
  for (size_t i = 0; i + 1 < np.vx_.size(); ++i) {
    const auto& a = np.vx_[i];
    const auto& b = np.vx_[i + 1];
    np.seg_.push_back({a, b, Rat(b.y - a.y, b.x - a.x), b.x - a.x});
  }
  return np;
}

Rat NewtonPolygon::value_at(const Rat& x) const {
  require(Rat(vx_.front().x) <= x && x <= Rat(vx_.back().x),
          Err::ZeroArgument, "hull evaluated outside its span");
  for (const auto& s : seg_) {
    if (x <= Rat(s.b.x))
      return Rat(s.a.y) + s.slope * (x - Rat(s.a.x));
  }
  return Rat(vx_.back().y);  // single point, x == that point
}

void NewtonPolygon::check_unknown(
    const std::vector<PolygonPoint>& lower_bounds) const {
  for (const auto& p : lower_bounds) {
    if (p.x < vx_.front().x || p.x > vx_.back().x) {
      // Outside the span the hull is already determined by known points
      // only when the unknown coefficient cannot create a lower segment;
      // be conservative and refuse.
      fail(Err::PrecisionExhausted,
           "coefficient of uncertain valuation outside the hull span");
    }
    require(Rat(p.y) >= value_at(Rat(p.x)), Err::PrecisionExhausted,
            "coefficient precision too low to certify the Newton polygon");
  }
}

Rat NewtonPolygon::min_slope() const {
  require(!seg_.empty(), Err::DegeneratePolynomial, "polygon has no segment");
  return seg_.front().slope;
}

Rat NewtonPolygon::max_slope() const {
  require(!seg_.empty(), Err::DegeneratePolynomial, "polygon has no segment");
  return seg_.back().slope;
}

std::string NewtonPolygon::str() const {
  std::ostringstream os;
  os << "hull";
  for (const auto& p : vx_) os << " (" << p.x << "," << p.y << ")";
  if (!seg_.empty()) {
    os << "; slopes";
    for (const auto& s : seg_)
      os << " " << s.slope.str() << "x" << s.length;
  }
  return os.str();
}

}  // namespace djulia
