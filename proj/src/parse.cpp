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

#include "djulia/parse.hpp"

namespace djulia {

RatFunc parse_ratfunc(const FqCtx* F, const std::string& text) {
  std::map<std::string, RatFunc> vars;
  vars.emplace("t", RatFunc::gen(F));
  vars.emplace("T", RatFunc::gen(F));
  ExprParser<RatFunc> p(text, std::move(vars), RatFunc::one(F));
  return p.parse();
}

Place parse_place(const FqCtx* F, const std::string& text) {
  size_t a = text.find_first_not_of(" \t");
  size_t b = text.find_last_not_of(" \t");
  require(a != std::string::npos, Err::ParseError, "empty place");
  std::string body = text.substr(a, b - a + 1);
  if (body == "inf" || body == "infty" || body == "oo")
    return Place::infinite(F);
  return Place::finite(parse_monic_poly(F, body));
}

PolyA parse_monic_poly(const FqCtx* F, const std::string& text) {
  RatFunc f = parse_ratfunc(F, text);
  require(f.is_polynomial(), Err::ParseError, "expected a polynomial: " + text);
  PolyA g = f.num();
  require(g.deg() >= 1, Err::ConstantArgument, "expected a nonconstant polynomial");
  require(g.lead() == fq_one(F), Err::NotMonic, "expected a monic polynomial");
  return g;
}

}  // namespace djulia
