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

#include "djulia/localfield.hpp"
#include "djulia/polygon.hpp"

namespace djulia {

// f(y) = w + sum a[i] y^(q^i), the shape every root problem in this library
// reduces to (twisted-polynomial images and kernels).  a[0] must be nonzero
// so that f is separable; shifting the argument only changes w, which makes
// recentring free.
struct LocalAdditivePoly {
  const LocalContext* C = nullptr;
  std::vector<LaurentSeries> a;  // a[i] multiplies y^(q^i); a.back() nonzero
  LaurentSeries w;
  bool w_exact_zero = false;  // w is exactly 0 (kernel problems), not just
                              // zero to working precision

  LaurentSeries eval(const LaurentSeries& y) const;
  int top() const { return static_cast<int>(a.size()) - 1; }
};

// Newton polygon of f: (q^i, v(a_i)) and (0, v(w)); coefficients that are
// only zero to working precision must not be able to alter the hull, else
// PrecisionExhausted.
NewtonPolygon newton_polygon(const LocalAdditivePoly& f);

struct RootReport {
  std::vector<LaurentSeries> roots;  // certified roots in L_v, mod pi^target
  bool complete = true;   // true when the list provably exhausts the
                          // L_v-roots of f
  std::vector<std::string> notes;  // absence certificates / obstructions
};

// Newton iteration y <- y - f(y)/a_0 from y0, certified by the valuation of
// f(y) strictly increasing into the convergence basin; returns the root to
// target_prec.  Callers must start inside the basin (e.g. from a simple
// residual root); failures raise HenselHypothesisFailed or
// PrecisionExhausted.
LaurentSeries hensel_lift(const LocalAdditivePoly& f, LaurentSeries y0,
                          long long target_prec);

// Single sweep over the Newton polygon: integer-slope segments produce
// residual equations over k_v, solved exhaustively; simple residual roots
// are lifted and certified by resubstitution.  Fractional slopes and
// residual roots outside k_v certify absence (the report stays complete);
// non-simple residual roots are only noted and mark the report incomplete.
RootReport local_roots(const LocalAdditivePoly& f, long long target_prec);

// Full disk-descent: recenters at every residual root until each disk is
// resolved by Hensel lifting or certified empty, so the returned report is
// always complete (or the call raises PrecisionExhausted / BudgetExceeded).
RootReport isolate_roots(const LocalAdditivePoly& f, long long target_prec,
                         long long max_nodes = 4096);

// Number of distinct rational digit prefixes (valuation levels < nu_stop)
// among the roots of f over the algebraic closure: a prefix counts once no
// matter how many roots continue below it, and prefixes that would need a
// residue-field extension or a fractional-valuation digit above nu_stop are
// excluded.  This is exactly the number of residue classes mod the disk
// {v >= nu_stop} met by the root set.
long long count_root_prefixes(const LocalAdditivePoly& f, long long nu_stop,
                              long long max_nodes = 4096);

}  // namespace djulia
