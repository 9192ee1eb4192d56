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

#include <cstdint>
#include <numeric>
#include <string>

#include "djulia/errors.hpp"

namespace djulia {

// Exact rational numbers.  All logarithms in this library are taken in units
// of log q and stay exact: valuations are integers, place degrees are
// integers, and the local invariants are small fractions with denominators
// like q^i - 1, so 64-bit storage with 128-bit intermediates is ample.
// Every operation normalizes (gcd 1, positive denominator) and checks for
// overflow rather than wrapping.
class Rat {
 public:
  Rat() : n_(0), d_(1) {}
  Rat(long long n) : n_(n), d_(1) {}
  Rat(long long n, long long d) : n_(n), d_(d) { normalize(); }

  long long num() const { return n_; }
  long long den() const { return d_; }

  bool is_zero() const { return n_ == 0; }
  bool is_integer() const { return d_ == 1; }

  Rat operator-() const { return Rat(-n_, d_); }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return from128((__int128)a.n_ * b.d_ + (__int128)b.n_ * a.d_,
                   (__int128)a.d_ * b.d_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) { return a + (-b); }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return from128((__int128)a.n_ * b.n_, (__int128)a.d_ * b.d_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    require(b.n_ != 0, Err::ZeroArgument, "rational division by zero");
    return from128((__int128)a.n_ * b.d_, (__int128)a.d_ * b.n_);
  }

  Rat& operator+=(const Rat& b) { return *this = *this + b; }
  Rat& operator-=(const Rat& b) { return *this = *this - b; }
  Rat& operator*=(const Rat& b) { return *this = *this * b; }
  Rat& operator/=(const Rat& b) { return *this = *this / b; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.n_ == b.n_ && a.d_ == b.d_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return (__int128)a.n_ * b.d_ < (__int128)b.n_ * a.d_;
  }
  friend bool operator>(const Rat& a, const Rat& b) { return b < a; }
  friend bool operator<=(const Rat& a, const Rat& b) { return !(b < a); }
  friend bool operator>=(const Rat& a, const Rat& b) { return !(a < b); }

  static Rat max(const Rat& a, const Rat& b) { return a < b ? b : a; }
  static Rat min(const Rat& a, const Rat& b) { return a < b ? a : b; }

  // max(value, 0): the log^+ of the product formula world.
  Rat clamp_nonneg() const { return n_ > 0 ? *this : Rat(0); }

  // Smallest integer >= value.
  long long ceil() const {
    long long q = n_ / d_;
    if (n_ % d_ != 0 && n_ > 0) ++q;
    return q;
  }
  // Largest integer <= value.
  long long floor() const {
    long long q = n_ / d_;
    if (n_ % d_ != 0 && n_ < 0) --q;
    return q;
  }

  // Prints `p` when integral and `p/q` otherwise; the CLI contract for exact
  // rationals.
  std::string str() const {
    if (d_ == 1) return std::to_string(n_);
    return std::to_string(n_) + "/" + std::to_string(d_);
  }

 private:
  static Rat from128(__int128 n, __int128 d) {
    require(d != 0, Err::ZeroArgument, "rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    __int128 g = gcd128(n < 0 ? -n : n, d);
    if (g > 1) { n /= g; d /= g; }
    require(fits(n) && fits(d), Err::Overflow, "rational overflow");
    Rat r;
    r.n_ = (long long)n;
    r.d_ = (long long)d;
    return r;
  }
  static __int128 gcd128(__int128 a, __int128 b) {
    while (b != 0) { __int128 t = a % b; a = b; b = t; }
    return a == 0 ? 1 : a;
  }
  static bool fits(__int128 v) {
    return v >= INT64_MIN && v <= INT64_MAX;
  }
  void normalize() {
    *this = from128(n_, d_);
  }

  long long n_, d_;
};

}  // namespace djulia
