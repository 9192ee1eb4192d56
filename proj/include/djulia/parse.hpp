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

#include <functional>
#include <map>
#include <string>

#include "djulia/places.hpp"

namespace djulia {

// Recursive-descent expression parser shared by the scalar and family
// grammars: integers (reduced mod p), named variables, + - * / ^ and
// parentheses, with ^ taking a nonnegative integer literal.  V is any field
// value type with arithmetic operators, pow(long long) and from_int.
template <class V>
class ExprParser {
 public:
  ExprParser(std::string text, std::map<std::string, V> vars, V one)
      : s_(std::move(text)), vars_(std::move(vars)), one_(std::move(one)) {}

  V parse() {
    V v = expr();
    skip_ws();
    require(pos_ == s_.size(), Err::ParseError,
            "trailing input at '" + s_.substr(pos_) + "'");
    return v;
  }

 private:
  V expr() {
    V acc = term();
    while (true) {
      skip_ws();
      if (peek() == '+') { ++pos_; acc = acc + term(); }
      else if (peek() == '-') { ++pos_; acc = acc - term(); }
      else return acc;
    }
  }
  V term() {
    V acc = factor();
    while (true) {
      skip_ws();
      if (peek() == '*') { ++pos_; acc = acc * factor(); }
      else if (peek() == '/') { ++pos_; acc = acc / factor(); }
      else return acc;
    }
  }
  V factor() {
    skip_ws();
    if (peek() == '-') { ++pos_; return V::zero(one_.context()) - factor(); }
    V base = atom();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      require(isdigit(peek()), Err::ParseError, "exponent must be an integer");
      long long e = 0;
      while (isdigit(peek())) e = e * 10 + (s_[pos_++] - '0');
      return base.pow(e);
    }
    return base;
  }
  V atom() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      ++pos_;
      V v = expr();
      skip_ws();
      require(peek() == ')', Err::ParseError, "missing ')'");
      ++pos_;
      return v;
    }
    if (isdigit(c)) {
      long long n = 0;
      while (isdigit(peek())) n = n * 10 + (s_[pos_++] - '0');
      return V::from_int(one_.context(), n);
    }
    if (isalpha(c) || c == '_') {
      std::string name;
      while (isalnum(peek()) || peek() == '_') name += s_[pos_++];
      auto it = vars_.find(name);
      require(it != vars_.end(), Err::ParseError, "unknown variable '" + name + "'");
      return it->second;
    }
    fail(Err::ParseError, "unexpected character '" + std::string(1, c) + "'");
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip_ws() {
    while (pos_ < s_.size() && (s_[pos_] == ' ' || s_[pos_] == '\t')) ++pos_;
  }
  static bool isdigit(char c) { return c >= '0' && c <= '9'; }
  static bool isalpha(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z');
  }
  static bool isalnum(char c) { return isdigit(c) || isalpha(c); }

  std::string s_;
  size_t pos_ = 0;
  std::map<std::string, V> vars_;
  V one_;
};

// Rational function of t over F_q.
RatFunc parse_ratfunc(const FqCtx* F, const std::string& text);

// "inf" or a monic irreducible polynomial of t.
Place parse_place(const FqCtx* F, const std::string& text);

// Monic nonconstant element of F_q[T] (an ideal generator / torsion level).
PolyA parse_monic_poly(const FqCtx* F, const std::string& text);

}  // namespace djulia
