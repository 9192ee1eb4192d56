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
#include <string>
#include <vector>

#include "djulia/errors.hpp"

namespace djulia {

// Finite field F_q, q = p^e.  Elements are encoded as integers in [0, q):
// the base-p digits of the code are the coordinates in the power basis of
// F_p[u]/(m(u)) for a fixed deterministic irreducible m (smallest in the
// degree-then-lex order).  Addition is digitwise mod p; multiplication goes
// through discrete log tables on a fixed primitive element, so contexts cost
// O(q) memory.  Contexts are interned per q: FqElem values hold a plain
// pointer that stays valid for the process lifetime.
struct FqCtx {
  int p = 0;
  int e = 0;
  int q = 0;
  std::vector<int> modulus;       // coefficients of m(u), degree e, monic
  std::vector<uint16_t> exp_tab;  // exp_tab[k] = g^k, k in [0, q-1)
  std::vector<int> log_tab;       // log_tab[x] = k with g^k = x, x != 0

  int add(int a, int b) const;
  int neg(int a) const;
  int sub(int a, int b) const { return add(a, neg(b)); }
  int mul(int a, int b) const {
    if (a == 0 || b == 0) return 0;
    int k = log_tab[a] + log_tab[b];
    if (k >= q - 1) k -= q - 1;
    return exp_tab[k];
  }
  int inv(int a) const {
    require(a != 0, Err::ZeroArgument, "inverse of zero in F_q");
    int k = log_tab[a];
    return exp_tab[k == 0 ? 0 : q - 1 - k];
  }
  int pow(int a, long long n) const;
  // x -> x^p, the absolute Frobenius.
  int frob(int a) const { return pow(a, p); }
  // The unique p-th root (F_q is perfect): x^(p^(e-1)).
  int pth_root(int a) const;
  // Reduction of an integer (mod p) into the prime field.
  int from_int(long long n) const {
    long long r = n % p;
    if (r < 0) r += p;
    return (int)r;
  }
};

// Interned context lookup; validates that q is a prime power.
const FqCtx* fq_context(int q);

class FqElem {
 public:
  using Ctx = const FqCtx*;

  FqElem() : F_(nullptr), v_(0) {}
  FqElem(const FqCtx* F, int v) : F_(F), v_((uint16_t)v) {}

  static FqElem zero(Ctx c) { return FqElem(c, 0); }
  static FqElem one(Ctx c) { return FqElem(c, 1); }
  static FqElem from_int(Ctx c, long long n) {
    return FqElem(c, c->from_int(n));
  }

  Ctx context() const { return F_; }
  const FqCtx* field() const { return F_; }
  int code() const { return v_; }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  friend FqElem operator+(const FqElem& a, const FqElem& b) {
    return FqElem(a.ctx(b), a.F_->add(a.v_, b.v_));
  }
  friend FqElem operator-(const FqElem& a, const FqElem& b) {
    return FqElem(a.ctx(b), a.F_->sub(a.v_, b.v_));
  }
  friend FqElem operator*(const FqElem& a, const FqElem& b) {
    return FqElem(a.ctx(b), a.F_->mul(a.v_, b.v_));
  }
  friend FqElem operator/(const FqElem& a, const FqElem& b) {
    return FqElem(a.ctx(b), a.F_->mul(a.v_, a.F_->inv(b.v_)));
  }
  FqElem operator-() const { return FqElem(F_, F_->neg(v_)); }
  FqElem inv() const { return FqElem(F_, F_->inv(v_)); }
  FqElem pow(long long n) const { return FqElem(F_, F_->pow(v_, n)); }
  FqElem frob() const { return FqElem(F_, F_->frob(v_)); }
  FqElem pth_root() const { return FqElem(F_, F_->pth_root(v_)); }

  friend bool operator==(const FqElem& a, const FqElem& b) {
    return a.F_ == b.F_ && a.v_ == b.v_;
  }
  friend bool operator!=(const FqElem& a, const FqElem& b) { return !(a == b); }

  std::string str() const { return std::to_string(v_); }

 private:
  const FqCtx* ctx(const FqElem& o) const {
    require(F_ != nullptr && F_ == o.F_, Err::InvariantViolation,
            "F_q elements from different fields");
    return F_;
  }
  const FqCtx* F_;
  uint16_t v_;
};

inline FqElem fq_zero(const FqCtx* F) { return FqElem(F, 0); }
inline FqElem fq_one(const FqCtx* F) { return FqElem(F, 1); }
inline FqElem fq_int(const FqCtx* F, long long n) {
  return FqElem(F, F->from_int(n));
}

}  // namespace djulia
