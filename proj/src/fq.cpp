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

#include "djulia/fq.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace djulia {

namespace {

// Digit vector of a code in base p (length e).
std::vector<int> digits(int code, int p, int e) {
  std::vector<int> d(e, 0);
  for (int i = 0; i < e; ++i) { d[i] = code % p; code /= p; }
  return d;
}

int undigits(const std::vector<int>& d, int p) {
  int code = 0;
  for (int i = (int)d.size() - 1; i >= 0; --i) code = code * p + d[i];
  return code;
}

// Multiply two F_p[u] polynomials (digit vectors) and reduce mod the monic
// modulus of degree e.  Only used while building the log tables.
std::vector<int> polymulmod(const std::vector<int>& a, const std::vector<int>& b,
                            const std::vector<int>& mod, int p, int e) {
  std::vector<int> prod(2 * e - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (int k = 2 * e - 2; k >= e; --k) {
    int c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (int i = 0; i < e; ++i) {
      int t = prod[k - e + i] - c * mod[i] % p;
      prod[k - e + i] = ((t % p) + p) % p;
    }
  }
  prod.resize(e);
  return prod;
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Smallest monic irreducible of degree e over F_p in degree-then-lex order,
// tested by brute force over the p^e codes (no roots, no low-degree factors;
// e stays tiny so exhaustive factor search is fine).
std::vector<int> find_modulus(int p, int e) {
  auto divides = [&](const std::vector<int>& g, std::vector<int> f) {
    // polynomial long division over F_p, g monic-normalized first
    int dg = (int)g.size() - 1;
    while (dg >= 0 && g[dg] == 0) --dg;
    if (dg <= 0) return false;
    int lead_inv = 1;
    for (int x = 1; x < p; ++x) if (x * g[dg] % p == 1) { lead_inv = x; break; }
    int df = (int)f.size() - 1;
    while (df >= 0 && f[df] == 0) --df;
    while (df >= dg) {
      int c = f[df] * lead_inv % p;
      for (int i = 0; i <= dg; ++i) {
        int t = f[df - dg + i] - c * g[i] % p;
        f[df - dg + i] = ((t % p) + p) % p;
      }
      while (df >= 0 && f[df] == 0) --df;
    }
    return df < 0;
  };
  long long pe = 1;
  for (int i = 0; i < e; ++i) pe *= p;
  for (long long low = 0; low < pe; ++low) {
    std::vector<int> f = digits((int)low, p, e);
    f.push_back(1);  // monic of degree e
    bool irred = true;
    // trial factors of degree 1..e/2
    for (int dd = 1; irred && 2 * dd <= e; ++dd) {
      long long pd = 1;
      for (int i = 0; i < dd; ++i) pd *= p;
      for (long long c = 0; irred && c < pd; ++c) {
        std::vector<int> g = digits((int)c, p, dd);
        g.push_back(1);
        if (divides(g, f)) irred = false;
      }
    }
    if (irred) return f;
  }
  fail(Err::InvariantViolation, "no irreducible modulus found");
}

std::unique_ptr<FqCtx> build_context(int q) {
  int p = 0, e = 0;
  for (int cand = 2; cand <= q; ++cand) {
    if (!is_prime(cand)) continue;
    int n = q, k = 0;
    while (n % cand == 0) { n /= cand; ++k; }
    if (n == 1 && k >= 1) { p = cand; e = k; break;
    }
    if (q % cand == 0) break;  // divisible by a prime but not a power of it
  }
  require(p != 0, Err::ParseError,
          "q = " + std::to_string(q) + " is not a prime power");
  require(q <= 1 << 14, Err::Unsupported, "field size too large");

  auto ctx = std::make_unique<FqCtx>();
  ctx->p = p;
  ctx->e = e;
  ctx->q = q;
  ctx->modulus = e == 1 ? std::vector<int>{0, 1} : find_modulus(p, e);

  // Find a primitive element by brute force: order of g is q-1 iff
  // g^((q-1)/l) != 1 for every prime l | q-1.
  std::vector<int> prime_divs;
  int m = q - 1;
  for (int d = 2; d * d <= m; ++d)
    if (m % d == 0) { prime_divs.push_back(d); while (m % d == 0) m /= d; }
  if (m > 1) prime_divs.push_back(m);

  auto mul_codes = [&](int a, int b) {
    auto da = digits(a, p, e), db = digits(b, p, e);
    return undigits(polymulmod(da, db, ctx->modulus, p, e), p);
  };
  auto pow_codes = [&](int a, long long n) {
    int r = 1;
    while (n > 0) {
      if (n & 1) r = mul_codes(r, a);
      a = mul_codes(a, a);
      n >>= 1;
    }
    return r;
  };
  int g = 0;
  for (int cand = 2; cand < q; ++cand) {
    bool primitive = true;
    for (int l : prime_divs)
      if (pow_codes(cand, (q - 1) / l) == 1) { primitive = false; break; }
    if (primitive) { g = cand; break; }
  }
  if (g == 0) g = 1;  // q = 2, the only unit is 1

  ctx->exp_tab.resize(q - 1);
  ctx->log_tab.assign(q, 0);
  int cur = 1;
  for (int k = 0; k < q - 1; ++k) {
    ctx->exp_tab[k] = (uint16_t)cur;
    ctx->log_tab[cur] = k;
    cur = mul_codes(cur, g);
  }
  require(cur == 1, Err::InvariantViolation, "primitive element order wrong");
  return ctx;
}

}  // namespace

int FqCtx::add(int a, int b) const {
  if (e == 1) { int s = a + b; return s >= p ? s - p : s; }
  int out = 0, mult = 1;
  for (int i = 0; i < e; ++i) {
    int s = (a % p + b % p) % p;
    out += s * mult;
    mult *= p;
    a /= p;
    b /= p;
  }
  return out;
}

int FqCtx::neg(int a) const {
  if (a == 0) return 0;
  if (e == 1) return p - a;
  int out = 0, mult = 1, x = a;
  for (int i = 0; i < e; ++i) {
    int d = x % p;
    out += (d == 0 ? 0 : p - d) * mult;
    mult *= p;
    x /= p;
  }
  return out;
}

int FqCtx::pow(int a, long long n) const {
  if (a == 0) {
    require(n > 0, Err::ZeroArgument, "0^n with n <= 0");
    return 0;
  }
  long long k = (long long)log_tab[a] * (n % (q - 1));
  k %= (q - 1);
  if (k < 0) k += q - 1;
  return exp_tab[k];
}

int FqCtx::pth_root(int a) const {
  long long n = 1;
  for (int i = 0; i < e - 1; ++i) n *= p;
  return a == 0 ? 0 : pow(a, n);
}

const FqCtx* fq_context(int q) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<FqCtx>> registry;
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(q);
  if (it == registry.end())
    it = registry.emplace(q, build_context(q)).first;
  return it->second.get();
}

}  // namespace djulia
