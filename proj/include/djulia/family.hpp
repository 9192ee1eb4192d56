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

#include "djulia/csv.hpp"
#include "djulia/globalmu.hpp"
#include "djulia/torsion.hpp"

namespace djulia {

// One-parameter families of Drinfeld modules: coefficients are rational
// functions of a parameter over L, specialized fibre by fibre at the points
// of P^1(L) and fed through the global mu/torsion pipeline.

using PolyB = Poly<RatFunc>;  // polynomials in the parameter over L

// A rational function of the family parameter with coefficients in F_q(t),
// kept reduced with a monic (lead coefficient 1) denominator.  Satisfies
// the field concept ExprParser expects, and knows how to specialize at any
// point of P^1(L).
class ParamRat {
 public:
  using Ctx = const FqCtx*;

  explicit ParamRat(Ctx F) : num_(PolyB::zero(F)), den_(PolyB::one(F)) {}
  ParamRat(PolyB num, PolyB den);

  static ParamRat zero(Ctx F) { return ParamRat(F); }
  static ParamRat one(Ctx F) { return lift(RatFunc::one(F)); }
  static ParamRat from_int(Ctx F, long long n) {
    return lift(RatFunc::from_int(F, n));
  }
  static ParamRat gen(Ctx F) {  // the parameter itself
    return ParamRat(PolyB::gen(F), PolyB::one(F));
  }
  static ParamRat lift(const RatFunc& x) {  // an element of L, constant in it
    return ParamRat(PolyB::constant(x), PolyB::one(x.context()));
  }

  Ctx context() const { return num_.context(); }
  const PolyB& num() const { return num_; }
  const PolyB& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  friend ParamRat operator+(const ParamRat& a, const ParamRat& b) {
    return ParamRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend ParamRat operator-(const ParamRat& a, const ParamRat& b) {
    return ParamRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend ParamRat operator*(const ParamRat& a, const ParamRat& b) {
    return ParamRat(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend ParamRat operator/(const ParamRat& a, const ParamRat& b);
  ParamRat operator-() const { return ParamRat(-num_, den_); }
  ParamRat pow(long long e) const;

  // Value at beta = b; nullopt when b is a pole.
  std::optional<RatFunc> at(const RatFunc& b) const;
  // Value at beta = infinity; nullopt when the degree in the parameter of
  // the numerator exceeds that of the denominator.
  std::optional<RatFunc> at_infinity() const;

 private:
  PolyB num_, den_;
};

struct FamilySpec {
  const FqCtx* F = nullptr;
  std::string param = "beta";
  std::vector<ParamRat> coeffs;  // a_1 .. a_r as functions of the parameter
  int rank() const { return static_cast<int>(coeffs.size()); }
};

// `q = `, optional `rank = `, `param = <name>`, `coeffs = [...]` with
// entries rational in t and the parameter; '#' comments.
FamilySpec parse_family_text(const std::string& text);
FamilySpec parse_family_file(const std::string& path);

// The fibre at beta (nullopt encodes beta = infinity).  A coefficient pole
// or a vanishing top coefficient makes the specialization invalid; the flag
// says which.
struct Fibre {
  std::optional<DrinfeldModule> mod;
  std::string flag;  // empty when valid
};
Fibre specialize(const FamilySpec& spec, const std::optional<RatFunc>& beta);

struct FibreResult {
  std::string beta;  // "inf" or the value in t
  Rat beta_height;
  bool valid = false;
  std::string flags;  // invalid reason, per-fibre error, or lower-bound note
  Rat h_j, mu_val;
  long long S_a_size = 0;
  mpz_class torsion_found = 0;  // #points; a lower bound when flagged
  bool torsion_lower_bound_only = false;
  mpz_class bound = 0;
};

struct FamilyScan {
  std::vector<FibreResult> fibres;  // ordered by (height, canonical beta)
  long long valid_fibres = 0;
  Rat min_mu;            // over valid fibres (1 when none)
  mpz_class max_torsion;  // over valid fibres (0 when none)
};

// Scans every beta in P^1(L) of height <= beta_height_max.  Fibre work is
// independent and runs on `threads` workers (0 = hardware concurrency);
// results are stored by fibre index, so the output is identical at any
// parallelism level.  Per-fibre failures are recorded in `flags`, with the
// torsion column demoted to a proven lower bound, and the scan continues.
FamilyScan family_scan(const FamilySpec& spec, long long beta_height_max,
                       long long N, const PolyA& a_gen, int threads = 0);

// CSV rows: header, one row per fibre, and a trailing summary row with the
// minimum mu and maximum torsion over the valid fibres.
std::vector<CsvRow> family_table(const FamilyScan& scan);

}  // namespace djulia
