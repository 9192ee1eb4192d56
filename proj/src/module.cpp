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

#include "djulia/module.hpp"

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>

#include "djulia/kvfile.hpp"
#include "djulia/parse.hpp"

namespace djulia {

TwistedPoly operator+(const TwistedPoly& a, const TwistedPoly& b) {
  std::vector<RatFunc> c;
  int n = std::max(a.deg(), b.deg());
  c.reserve(static_cast<size_t>(n + 1));
  for (int i = 0; i <= n; ++i) c.push_back(a.coeff(i) + b.coeff(i));
  return TwistedPoly(a.F_, std::move(c));
}

TwistedPoly operator*(const TwistedPoly& a, const TwistedPoly& b) {
  if (a.is_zero() || b.is_zero()) return TwistedPoly::zero(a.F_);
  std::vector<RatFunc> c(static_cast<size_t>(a.deg() + b.deg() + 1),
                         RatFunc::zero(a.F_));
  for (int i = 0; i <= a.deg(); ++i) {
    if (a.c_[static_cast<size_t>(i)].is_zero()) continue;
    for (int j = 0; j <= b.deg(); ++j) {
      // tau^i c = c^(q^i) tau^i
      c[static_cast<size_t>(i + j)] =
          c[static_cast<size_t>(i + j)] +
          a.c_[static_cast<size_t>(i)] *
              b.c_[static_cast<size_t>(j)].frobenius_power(i);
    }
  }
  return TwistedPoly(a.F_, std::move(c));
}

RatFunc TwistedPoly::eval(const RatFunc& x) const {
  RatFunc acc = RatFunc::zero(F_);
  for (int i = 0; i <= deg(); ++i) {
    if (c_[static_cast<size_t>(i)].is_zero()) continue;
    acc = acc + c_[static_cast<size_t>(i)] * x.frobenius_power(i);
  }
  return acc;
}

std::string TwistedPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  long long e = 1;
  for (int i = 0; i <= deg(); ++i, e *= F_->q) {
    const RatFunc& c = c_[static_cast<size_t>(i)];
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    std::string cs = c.str();
    if (cs == "1") {
      os << "x";
    } else {
      if (cs.find_first_of("+*/^") != std::string::npos) cs = "(" + cs + ")";
      os << cs << "*x";
    }
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

DrinfeldModule::DrinfeldModule(const FqCtx* F, std::vector<RatFunc> coeffs)
    : F_(F) {
  require(!coeffs.empty(), Err::DegeneratePolynomial,
          "a Drinfeld module needs rank >= 1");
  require(!coeffs.back().is_zero(), Err::DegeneratePolynomial,
          "top coefficient a_r must be nonzero");
  a_.reserve(coeffs.size() + 1);
  a_.push_back(RatFunc::gen(F));  // gamma(T) = t
  for (auto& c : coeffs) a_.push_back(std::move(c));
}

TwistedPoly DrinfeldModule::phi(const PolyA& a) const {
  TwistedPoly acc = TwistedPoly::zero(F_);
  TwistedPoly pT = phi_T();
  for (int j = a.deg(); j >= 0; --j) {
    acc = acc * pT + TwistedPoly::constant(RatFunc::from(a.coeff(j)));
  }
  return acc;
}

RatFunc DrinfeldModule::phi_eval(const PolyA& a, const RatFunc& x) const {
  // phi_(sum b_j T^j)(x) = sum b_j y_j with y_0 = x, y_(j+1) = phi_T(y_j).
  RatFunc acc = RatFunc::zero(F_);
  RatFunc y = x;
  TwistedPoly pT = phi_T();
  for (int j = 0; j <= a.deg(); ++j) {
    if (!a.coeff(j).is_zero())
      acc = acc + RatFunc::from(a.coeff(j)) * y;
    if (j < a.deg()) y = pT.eval(y);
  }
  return acc;
}

WeightedPoint DrinfeldModule::j_invariant() const {
  std::vector<RatFunc> coords;
  std::vector<int> weights;
  long long w = 1;
  for (int i = 1; i <= rank(); ++i) {
    w *= F_->q;
    require(w - 1 <= INT32_MAX, Err::Overflow, "weight q^i - 1 overflow");
    coords.push_back(a_[static_cast<size_t>(i)]);
    weights.push_back(static_cast<int>(w - 1));
  }
  return WeightedPoint(std::move(coords), std::move(weights));
}

DrinfeldModule DrinfeldModule::twist(const RatFunc& alpha) const {
  require(!alpha.is_zero(), Err::ZeroTwist, "twist by zero");
  std::vector<RatFunc> coeffs;
  long long w = 1;
  for (int i = 1; i <= rank(); ++i) {
    w *= F_->q;
    coeffs.push_back(alpha.pow(w - 1) * a_[static_cast<size_t>(i)]);
  }
  return DrinfeldModule(F_, std::move(coeffs));
}

std::string DrinfeldModule::str() const {
  return "phi_T(x) = " + phi_T().str() + " over F_" + std::to_string(F_->q) +
         "(t)";
}

DrinfeldModule parse_module_text(const std::string& text) {
  KvFile f = KvFile::parse(text);
  long long q = 0;
  try {
    q = std::stoll(f.at("q"));
  } catch (const std::exception&) {
    fail(Err::ParseError, "q must be an integer");
  }
  require(q >= 2 && q <= (1 << 14), Err::ParseError,
          "q out of range [2, 16384]");
  const FqCtx* F = fq_context(static_cast<int>(q));
  std::vector<std::string> items = kv_split_list(f.at("coeffs"));
  std::vector<RatFunc> coeffs;
  coeffs.reserve(items.size());
  for (const auto& s : items) coeffs.push_back(parse_ratfunc(F, s));
  DrinfeldModule phi(F, std::move(coeffs));
  if (f.kv.count("rank")) {
    long long r = std::stoll(f.at("rank"));
    require(r == phi.rank(), Err::ParseError,
            "rank does not match the number of coefficients");
  }
  return phi;
}

RatFunc gamma_image(const PolyA& a) {
  const FqCtx* F = a.context();
  RatFunc t = RatFunc::gen(F), acc = RatFunc::zero(F);
  for (int i = a.deg(); i >= 0; --i)
    acc = acc * t + RatFunc::from(a.coeff(i));
  return acc;
}

DrinfeldModule parse_module_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Err::IOError, "cannot read module file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_module_text(ss.str());
}

}  // namespace djulia
