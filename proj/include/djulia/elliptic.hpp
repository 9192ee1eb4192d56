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

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "djulia/csv.hpp"
#include "djulia/rational.hpp"

namespace djulia {

// The elliptic-curve analogue: Szpiro ratios, the proportion mu(E, N, (n!))
// of the j-mass killed by n!-torsion of the component groups, and the
// inequality mu >= (1 - sigma/n) / (sigma (1 - 1/n)).  Curve data is
// ingested from CSV, never computed from models.

// A formal combination sum_p c_p log p with rational coefficients.  Unique
// factorization makes {log p} linearly independent over Q, so equality and
// order are decidable exactly: clear denominators and compare the integer
// products p^e.  A fast certified dyadic-log interval settles most
// comparisons before the exact fallback.
class PrimeLogSum {
 public:
  PrimeLogSum() = default;

  void add(long long p, const Rat& coeff);
  bool is_zero() const { return c_.empty(); }
  const std::map<long long, Rat>& coeffs() const { return c_; }

  friend PrimeLogSum operator+(const PrimeLogSum& a, const PrimeLogSum& b);
  friend PrimeLogSum operator-(const PrimeLogSum& a, const PrimeLogSum& b);
  friend PrimeLogSum operator*(const Rat& r, const PrimeLogSum& a);

  // Exact sign of (a - b): -1, 0, or +1.
  static int compare(const PrimeLogSum& a, const PrimeLogSum& b);

  // a / b as an exact rational when a and b are proportional (b != 0),
  // otherwise nullopt.
  static std::optional<Rat> exact_ratio(const PrimeLogSum& a,
                                        const PrimeLogSum& b);

  // a / b as a rational within 1e-6 of the true value (b > 0); exact when
  // proportionality allows.
  static Rat ratio_within_tolerance(const PrimeLogSum& a,
                                    const PrimeLogSum& b);

 private:
  std::map<long long, Rat> c_;  // prime -> nonzero coefficient
};

// Whether m divides n!, via Legendre valuations (m >= 1).
bool divides_factorial(long long m, long long n);

struct EllipticLocalData {
  long long p = 0;          // residual prime
  long long ord_delta = 0;  // valuation of the minimal discriminant
  long long ord_cond = 0;   // valuation of the conductor
  long long ord_j = 0;      // valuation of j (negative iff multiplicative)
  long long weight = 1;     // local degree
  bool multiplicative() const { return ord_cond == 1; }
  bool semistable() const { return ord_cond <= 1; }
};

struct CurveRecord {
  std::string label;
  std::vector<EllipticLocalData> local;
  bool semistable() const;
};

// CSV with header `label,p,ord_delta,ord_cond,ord_j,weight`; consecutive
// rows sharing a label form one record.  Multiplicative rows must carry
// ord_j < 0 with ord_delta = -ord_j (the component group is cyclic of that
// order); violations are rejected with their row number.
std::vector<CurveRecord> ingest_rows(const std::vector<CsvRow>& rows);
std::vector<CurveRecord> ingest_csv(const std::string& path);

// (sum w ord_delta log p) / (sum w ord_cond log p); TrivialConductor when
// the conductor sum vanishes.
Rat szpiro_ratio(const CurveRecord& rec);

// mu(E, N, (n!)) with j_v = max(0, -ord_j) * weight * log p and S_E the
// multiplicative places whose component-group order -ord_j does not divide
// n!; maximization as in the Drinfeld case (empty denominator counts 1).
Rat mu_elliptic(const CurveRecord& rec, long long N, long long n);

// Verifies mu(E, 0, (n!)) >= (1 - sigma/n) / (sigma (1 - 1/n)) for a
// semistable record with n > sigma.  The verdict is decided exactly on the
// equivalent linear form n (X - Y) >= (n - 1) D of prime-log sums, where X
// and Y are the discriminant and conductor masses and D the j-mass over
// S_E; lhs and rhs are reported exactly when rational, else within 1e-6.
struct TheoremCheck {
  bool holds = false;
  Rat lhs, rhs;
};
TheoremCheck theorem_check(const CurveRecord& rec, long long n);

}  // namespace djulia
