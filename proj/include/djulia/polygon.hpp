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

#include "djulia/rational.hpp"
#include "djulia/errors.hpp"

namespace djulia {

struct PolygonPoint {
  long long x;  // exponent
  long long y;  // valuation of the coefficient
};

struct PolygonSegment {
  PolygonPoint a, b;    // endpoints, a.x < b.x
  Rat slope;            // (b.y - a.y) / (b.x - a.x)
  long long length;     // b.x - a.x = number of roots of valuation -slope
};

// Lower convex hull of a finite set of (exponent, valuation) points; the
// standard tool for reading off root valuations: a segment of slope s and
// horizontal length l certifies exactly l roots (with multiplicity, over
// the completion's algebraic closure) of valuation -s.
class NewtonPolygon {
 public:
  // Points need not be sorted; duplicate x keeps the smallest y.
  static NewtonPolygon from_points(std::vector<PolygonPoint> pts);

  const std::vector<PolygonPoint>& vertices() const { return vx_; }
  const std::vector<PolygonSegment>& segments() const { return seg_; }

  // Hull value at x (x inside [min_x, max_x]).
  Rat value_at(const Rat& x) const;

  // Certifies that coefficients known only as O(pi^bound) at the given
  // exponents cannot alter the hull, i.e. bound >= value_at(x).  Raises
  // PrecisionExhausted otherwise.
  void check_unknown(const std::vector<PolygonPoint>& lower_bounds) const;

  Rat min_slope() const;
  Rat max_slope() const;

  std::string str() const;

 private:
  std::vector<PolygonPoint> vx_;     // hull vertices, increasing x
  std::vector<PolygonSegment> seg_;  // between consecutive vertices
};

}  // namespace djulia
