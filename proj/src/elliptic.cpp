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

#include "djulia/elliptic.hpp"

#include <algorithm>
#include <numeric>

#include "djulia/errors.hpp"

namespace djulia {

namespace {

constexpr int kLogFrac = 96;   // fraction bits of the certified log2
constexpr int kLogWork = 192;  // working mantissa bits

// this gmpxx has no long long constructors; long is 64-bit on every
// supported target
mpz_class mpz_of(long long v) { return mpz_class(static_cast<long>(v)); }

// lo, hi with lo <= 2^kLogFrac * log2(u) <= hi, by the bit-extraction
// square-and-normalize loop run twice with downward / upward rounding.
struct Log2Bounds {
  mpz_class lo, hi;
};

Log2Bounds log2_bounds(const mpz_class& u) {
  require(u >= 1, Err::ZeroArgument, "log of a nonpositive integer");
  long n = static_cast<long>(mpz_sizeinbase(u.get_mpz_t(), 2)) - 1;
  mpz_class mlo, mhi;  // mantissa bounds, scaled by 2^kLogWork, in [1, 2)
  if (n <= kLogWork) {
    mlo = u << static_cast<unsigned long>(kLogWork - n);
    mhi = mlo;
  } else {
    mlo = u >> static_cast<unsigned long>(n - kLogWork);
    mhi = mlo + 1;
  }
  mpz_class out_lo = n, out_hi = n;
  const mpz_class one_p = mpz_class(1) << static_cast<unsigned long>(kLogWork);
  const mpz_class two_p = one_p << 1;
  for (int i = 0; i < kLogFrac; ++i) {
    mlo = (mlo * mlo) >> static_cast<unsigned long>(kLogWork);
    mhi = (mhi * mhi + one_p - 1) >> static_cast<unsigned long>(kLogWork);
    int blo = mlo >= two_p ? 1 : 0;
    int bhi = mhi >= two_p ? 1 : 0;
    out_lo = (out_lo << 1) + blo;
    out_hi = (out_hi << 1) + bhi;
    if (blo) mlo >>= 1;
    if (bhi) mhi = (mhi + 1) >> 1;
  }
  return {out_lo, out_hi + 1};
}

mpq_class to_mpq(const Rat& r) {
  return mpq_class(mpz_of(r.num()), mpz_of(r.den()));
}

// Interval [lo, hi] containing sum_p c_p log2(p).
struct QInterval {
  mpq_class lo, hi;
};

QInterval sum_log2_bounds(const std::map<long long, Rat>& coeffs) {
  QInterval out{0, 0};
  mpq_class scale = mpq_class(1) / (mpz_class(1) << kLogFrac);
  for (const auto& [p, c] : coeffs) {
    Log2Bounds b = log2_bounds(mpz_of(p));
    mpq_class blo = b.lo * scale, bhi = b.hi * scale, cq = to_mpq(c);
    if (c.num() >= 0) {
      out.lo += cq * blo;
      out.hi += cq * bhi;
    } else {
      out.lo += cq * bhi;
      out.hi += cq * blo;
    }
  }
  out.lo.canonicalize();
  out.hi.canonicalize();
  return out;
}

long long lcm_denominators(const std::map<long long, Rat>& coeffs) {
  long long m = 1;
  for (const auto& [p, c] : coeffs) {
    (void)p;
    long long d = c.den();
    long long g = std::gcd(m, d);
    require(m <= (1LL << 40) / (d / g), Err::Overflow,
            "prime-log coefficient denominators too large");
    m = m / g * d;
  }
  return m;
}

// Legendre: ord_l(n!) = sum_j floor(n / l^j).
long long factorial_valuation(long long n, long long l) {
  long long total = 0, pw = l;
  while (pw <= n) {
    total += n / pw;
    if (pw > n / l) break;  // next power would overflow past n
    pw *= l;
  }
  return total;
}

}  // namespace

bool divides_factorial(long long m, long long n) {
  require(m >= 1, Err::ZeroArgument, "divisibility of a nonpositive order");
  for (long long l = 2; l * l <= m; ++l) {
    if (m % l) continue;
    long long k = 0;
    while (m % l == 0) {
      m /= l;
      ++k;
    }
    if (factorial_valuation(n, l) < k) return false;
  }
  if (m > 1 && factorial_valuation(n, m) < 1) return false;
  return true;
}

void PrimeLogSum::add(long long p, const Rat& coeff) {
  require(p >= 2, Err::ZeroArgument, "prime must be at least 2");
  if (coeff.is_zero()) return;
  auto it = c_.find(p);
  if (it == c_.end()) {
    c_.emplace(p, coeff);
    return;
  }
  it->second += coeff;
  if (it->second.is_zero()) c_.erase(it);
}

PrimeLogSum operator+(const PrimeLogSum& a, const PrimeLogSum& b) {
  PrimeLogSum out = a;
  for (const auto& [p, c] : b.c_) out.add(p, c);
  return out;
}

PrimeLogSum operator-(const PrimeLogSum& a, const PrimeLogSum& b) {
  PrimeLogSum out = a;
  for (const auto& [p, c] : b.c_) out.add(p, -c);
  return out;
}

PrimeLogSum operator*(const Rat& r, const PrimeLogSum& a) {
  PrimeLogSum out;
  if (r.is_zero()) return out;
  for (const auto& [p, c] : a.c_) out.c_.emplace(p, r * c);
  return out;
}

int PrimeLogSum::compare(const PrimeLogSum& a, const PrimeLogSum& b) {
  PrimeLogSum d = a - b;
  if (d.c_.empty()) return 0;  // log p are Q-linearly independent
  QInterval iv = sum_log2_bounds(d.c_);
  if (iv.lo > 0) return 1;
  if (iv.hi < 0) return -1;
  // Near-tie: clear denominators and compare the integer products exactly.
  long long m = lcm_denominators(d.c_);
  mpz_class lhs = 1, rhs = 1;
  double bits = 0;
  for (const auto& [p, c] : d.c_) {
    long long e = c.num() * (m / c.den());
    int plen = 64 - __builtin_clzll(static_cast<unsigned long long>(p));
    bits += static_cast<double>(e < 0 ? -e : e) * plen;
    require(bits < static_cast<double>(1LL << 28), Err::BudgetExceeded,
            "prime-log comparison products too large");
    mpz_class pw;
    mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p),
                  static_cast<unsigned long>(e < 0 ? -e : e));
    if (e > 0)
      lhs *= pw;
    else
      rhs *= pw;
  }
  return cmp(lhs, rhs) < 0 ? -1 : (cmp(lhs, rhs) > 0 ? 1 : 0);
}

std::optional<Rat> PrimeLogSum::exact_ratio(const PrimeLogSum& a,
                                            const PrimeLogSum& b) {
  if (b.c_.empty()) return std::nullopt;
  const auto& [p0, c0] = *b.c_.begin();
  Rat r = (a.c_.count(p0) ? a.c_.at(p0) : Rat(0)) / c0;
  PrimeLogSum diff = a - (r * b);
  if (!diff.c_.empty()) return std::nullopt;
  return r;
}

Rat PrimeLogSum::ratio_within_tolerance(const PrimeLogSum& a,
                                        const PrimeLogSum& b) {
  require(compare(b, PrimeLogSum()) > 0, Err::ZeroArgument,
          "ratio by a nonpositive prime-log sum");
  if (std::optional<Rat> r = exact_ratio(a, b)) return *r;
  QInterval ia = sum_log2_bounds(a.c_), ib = sum_log2_bounds(b.c_);
  require(ib.lo > 0, Err::InvariantViolation,
          "certified bounds failed to separate a positive sum from zero");
  mpq_class lo = ia.lo >= 0 ? ia.lo / ib.hi : ia.lo / ib.lo;
  mpq_class hi = ia.hi >= 0 ? ia.hi / ib.lo : ia.hi / ib.hi;
  lo.canonicalize();
  hi.canonicalize();
  require(hi - lo < mpq_class(1, 10000000), Err::InvariantViolation,
          "certified ratio interval wider than the tolerance");
  // Round the midpoint to denominator 1e7; total error stays below 1e-6.
  mpq_class mid = (lo + hi) / 2 * 10000000;
  mpz_class num, twice_den = mpz_class(mid.get_den()) * 2;
  mpz_class shifted = mpz_class(mid.get_num()) * 2 + mid.get_den();
  mpz_fdiv_q(num.get_mpz_t(), shifted.get_mpz_t(), twice_den.get_mpz_t());
  require(num.fits_slong_p(), Err::Overflow, "ratio out of the exact range");
  return Rat(num.get_si(), 10000000);
}

bool CurveRecord::semistable() const {
  for (const EllipticLocalData& d : local)
    if (!d.semistable()) return false;
  return true;
}

namespace {

long long parse_ll(const std::string& s, const std::string& where) {
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    require(pos == s.size(), Err::ParseError, where + ": bad integer '" + s + "'");
    return v;
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail(Err::ParseError, where + ": bad integer '" + s + "'");
  }
}

bool is_prime_ll(long long p) {
  if (p < 2) return false;
  mpz_class z = mpz_of(p);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

PrimeLogSum delta_mass(const CurveRecord& rec) {
  PrimeLogSum s;
  for (const EllipticLocalData& d : rec.local)
    s.add(d.p, Rat(d.weight * d.ord_delta));
  return s;
}

PrimeLogSum cond_mass(const CurveRecord& rec) {
  PrimeLogSum s;
  for (const EllipticLocalData& d : rec.local)
    s.add(d.p, Rat(d.weight * d.ord_cond));
  return s;
}

// j_v = log^+ |j|_v = max(0, -ord_j) * weight * log p, one term per row.
PrimeLogSum j_mass(const EllipticLocalData& d) {
  PrimeLogSum s;
  if (d.ord_j < 0) s.add(d.p, Rat(d.weight * -d.ord_j));
  return s;
}

}  // namespace

std::vector<CurveRecord> ingest_rows(const std::vector<CsvRow>& rows) {
  std::vector<CurveRecord> out;
  if (rows.empty()) return out;
  const CsvRow header = {"label", "p", "ord_delta", "ord_cond", "ord_j",
                         "weight"};
  require(rows.front() == header, Err::ParseError,
          "expected header label,p,ord_delta,ord_cond,ord_j,weight");
  std::map<std::string, size_t> index;
  for (size_t i = 1; i < rows.size(); ++i) {
    const CsvRow& row = rows[i];
    if (row.size() == 1 && row[0].empty()) continue;  // blank line
    std::string rn = "row " + std::to_string(i + 1);
    require(row.size() == 6, Err::ParseError, rn + ": expected 6 fields");
    require(!row[0].empty(), Err::ParseError, rn + ": empty label");
    EllipticLocalData d;
    d.p = parse_ll(row[1], rn);
    d.ord_delta = parse_ll(row[2], rn);
    d.ord_cond = parse_ll(row[3], rn);
    d.ord_j = parse_ll(row[4], rn);
    d.weight = parse_ll(row[5], rn);
    require(is_prime_ll(d.p), Err::InvariantViolation, rn + ": p is not prime");
    require(d.ord_delta >= 0, Err::InvariantViolation,
            rn + ": ord_delta must be nonnegative");
    require(d.ord_cond >= 0, Err::InvariantViolation,
            rn + ": ord_cond must be nonnegative");
    require(d.weight >= 1, Err::InvariantViolation,
            rn + ": weight must be positive");
    if (d.ord_cond == 1) {
      require(d.ord_j < 0, Err::InvariantViolation,
              rn + ": multiplicative place needs ord_j < 0");
      require(d.ord_delta == -d.ord_j, Err::InvariantViolation,
              rn + ": component order -ord_j must equal ord_delta");
    }
    auto it = index.find(row[0]);
    if (it == index.end()) {
      index.emplace(row[0], out.size());
      out.push_back(CurveRecord{row[0], {d}});
    } else {
      out[it->second].local.push_back(d);
    }
  }
  return out;
}

std::vector<CurveRecord> ingest_csv(const std::string& path) {
  return ingest_rows(csv_read_file(path));
}

Rat szpiro_ratio(const CurveRecord& rec) {
  PrimeLogSum y = cond_mass(rec);
  require(!y.is_zero(), Err::TrivialConductor,
          rec.label + ": conductor has no finite support");
  return PrimeLogSum::ratio_within_tolerance(delta_mass(rec), y);
}

Rat mu_elliptic(const CurveRecord& rec, long long N, long long n) {
  require(n >= 1, Err::NTooSmall, "n must be positive");
  require(N >= 0, Err::NTooSmall, "N must be nonnegative");

  struct BadRow {
    PrimeLogSum j;
    bool in_se = false;
    long long p = 0;
    size_t idx = 0;
  };
  std::vector<BadRow> bad;
  PrimeLogSum total;
  for (size_t i = 0; i < rec.local.size(); ++i) {
    const EllipticLocalData& d = rec.local[i];
    PrimeLogSum j = j_mass(d);
    if (j.is_zero()) continue;
    total = total + j;
    bool in_se = d.multiplicative() && !divides_factorial(-d.ord_j, n);
    bad.push_back(BadRow{std::move(j), in_se, d.p, i});
  }
  if (total.is_zero()) return Rat(1);
  if (static_cast<long long>(bad.size()) <= N) return Rat(1);

  PrimeLogSum killed;  // mass of S_E
  std::vector<const BadRow*> se;
  for (const BadRow& b : bad) {
    if (!b.in_se) continue;
    killed = killed + b.j;
    se.push_back(&b);
  }
  // Greedy optimum as in the Drinfeld case: excluding a place outside S_E
  // removes equal mass from both sums and can only lower the ratio, so the
  // best budget spends on the largest members of S_E.
  std::sort(se.begin(), se.end(), [](const BadRow* a, const BadRow* b) {
    int c = PrimeLogSum::compare(a->j, b->j);
    if (c != 0) return c > 0;
    if (a->p != b->p) return a->p < b->p;
    return a->idx < b->idx;
  });
  PrimeLogSum dropped;
  for (size_t i = 0; i < std::min<size_t>(static_cast<size_t>(N), se.size());
       ++i)
    dropped = dropped + se[i]->j;
  return PrimeLogSum::ratio_within_tolerance(total - killed, total - dropped);
}

TheoremCheck theorem_check(const CurveRecord& rec, long long n) {
  require(rec.semistable(), Err::NotSemistable,
          rec.label + ": record has an additive place");
  for (const EllipticLocalData& d : rec.local) {
    if (d.ord_cond == 1) {
      require(d.ord_j < 0 && d.ord_delta == -d.ord_j, Err::InvariantViolation,
              rec.label + ": malformed multiplicative place");
    } else {
      require(d.ord_delta == 0 && d.ord_j >= 0, Err::InvariantViolation,
              rec.label + ": good place with nontrivial discriminant data");
    }
  }
  PrimeLogSum x = delta_mass(rec), y = cond_mass(rec);
  require(!y.is_zero(), Err::TrivialConductor,
          rec.label + ": conductor has no finite support");
  require(PrimeLogSum::compare(x, Rat(n) * y) < 0, Err::NTooSmall,
          rec.label + ": n must exceed the Szpiro ratio");

  PrimeLogSum killed;
  for (const EllipticLocalData& d : rec.local)
    if (d.multiplicative() && !divides_factorial(-d.ord_j, n))
      killed = killed + j_mass(d);

  // For a minimal semistable record the j-mass equals the discriminant mass
  // X, so mu >= (1 - sigma/n) / (sigma (1 - 1/n)) with sigma = X/Y clears
  // denominators to the linear form n (X - Y) >= (n - 1) D, decidable
  // exactly in the prime-log algebra.
  TheoremCheck out;
  out.holds =
      PrimeLogSum::compare(Rat(n) * (x - y), Rat(n - 1) * killed) >= 0;
  out.lhs = mu_elliptic(rec, 0, n);
  out.rhs = PrimeLogSum::ratio_within_tolerance(Rat(n) * y - x,
                                                Rat(n - 1) * x);
  return out;
}

}  // namespace djulia
