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

#include "djulia/family.hpp"

#include <atomic>
#include <fstream>
#include <map>
#include <sstream>
#include <thread>

#include "djulia/kvfile.hpp"
#include "djulia/parse.hpp"

namespace djulia {

ParamRat::ParamRat(PolyB num, PolyB den)
    : num_(std::move(num)), den_(std::move(den)) {
  require(!den_.is_zero(), Err::ZeroArgument,
          "zero denominator in the parameter field");
  if (num_.is_zero()) {
    den_ = PolyB::one(num_.context());
    return;
  }
  PolyB g = gcd(num_, den_);
  if (g.deg() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  RatFunc lc = den_.lead();
  if (!lc.is_one()) {
    num_ = num_ / lc;
    den_ = den_ / lc;
  }
}

ParamRat operator/(const ParamRat& a, const ParamRat& b) {
  require(!b.is_zero(), Err::ZeroArgument,
          "division by zero in the parameter field");
  return ParamRat(a.num_ * b.den_, a.den_ * b.num_);
}

ParamRat ParamRat::pow(long long e) const {
  if (e < 0) return one(context()) / pow(-e);
  ParamRat acc = one(context()), base = *this;
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

std::optional<RatFunc> ParamRat::at(const RatFunc& b) const {
  RatFunc d = den_(b);
  if (d.is_zero()) return std::nullopt;
  return num_(b) / d;
}

std::optional<RatFunc> ParamRat::at_infinity() const {
  // The fraction is reduced, so parameter degrees decide the limit.
  if (num_.deg() > den_.deg()) return std::nullopt;
  if (num_.deg() < den_.deg()) return RatFunc::zero(context());
  return num_.lead() / den_.lead();
}

FamilySpec parse_family_text(const std::string& text) {
  KvFile f = KvFile::parse(text);
  long long q = 0;
  try {
    q = std::stoll(f.at("q"));
  } catch (const std::exception&) {
    fail(Err::ParseError, "q must be an integer");
  }
  require(q >= 2 && q <= (1 << 14), Err::ParseError, "q out of range [2, 16384]");
  const FqCtx* F = fq_context(static_cast<int>(q));

  FamilySpec spec;
  spec.F = F;
  spec.param = f.at("param");
  auto is_alpha = [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_';
  };
  auto is_alnum = [&](char c) { return is_alpha(c) || (c >= '0' && c <= '9'); };
  require(is_alpha(spec.param.front()), Err::ParseError,
          "parameter must be an identifier");
  for (char c : spec.param)
    require(is_alnum(c), Err::ParseError, "parameter must be an identifier");
  require(spec.param != "t", Err::ParseError,
          "parameter name t shadows the base variable");

  std::map<std::string, ParamRat> vars = {
      {"t", ParamRat::lift(RatFunc::gen(F))}, {spec.param, ParamRat::gen(F)}};
  for (const std::string& s : kv_split_list(f.at("coeffs")))
    spec.coeffs.push_back(ExprParser<ParamRat>(s, vars, ParamRat::one(F)).parse());
  require(!spec.coeffs.empty(), Err::ParseError, "coeffs list is empty");
  require(!spec.coeffs.back().is_zero(), Err::DegeneratePolynomial,
          "top coefficient is identically zero");
  if (f.kv.count("rank")) {
    long long r = 0;
    try {
      r = std::stoll(f.at("rank"));
    } catch (const std::exception&) {
      fail(Err::ParseError, "rank must be an integer");
    }
    require(r == spec.rank(), Err::ParseError,
            "rank does not match the number of coefficients");
  }
  return spec;
}

FamilySpec parse_family_file(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), Err::IOError, "cannot read family file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_family_text(ss.str());
}

Fibre specialize(const FamilySpec& spec, const std::optional<RatFunc>& beta) {
  Fibre out;
  std::vector<RatFunc> coeffs;
  coeffs.reserve(spec.coeffs.size());
  for (const ParamRat& c : spec.coeffs) {
    std::optional<RatFunc> v = beta ? c.at(*beta) : c.at_infinity();
    if (!v) {
      out.flag = "invalid_specialization(pole)";
      return out;
    }
    coeffs.push_back(*v);
  }
  if (coeffs.back().is_zero()) {
    out.flag = "invalid_specialization(rank_drop)";
    return out;
  }
  out.mod = DrinfeldModule(spec.F, std::move(coeffs));
  return out;
}

namespace {

FibreResult scan_fibre(const FamilySpec& spec,
                       const std::optional<RatFunc>& beta, long long N,
                       const PolyA& a_gen) {
  FibreResult r;
  r.beta = beta ? beta->str() : "inf";
  r.beta_height = beta ? height(*beta) : Rat(0);
  Fibre fib = specialize(spec, beta);
  if (!fib.mod) {
    r.flags = fib.flag;
    return r;
  }
  const DrinfeldModule& phi = *fib.mod;
  try {
    r.h_j = phi.j_height();
    MuResult m = mu(phi, N, a_gen);
    r.mu_val = m.mu;
    r.S_a_size = static_cast<long long>(m.S_a.size());
    r.bound = torsion_bound(phi.rank(), N, a_gen);
    r.valid = true;
  } catch (const Error& e) {
    r.flags = std::string("error(") + err_name(e.code()) + ")";
    return r;
  }
  try {
    TorsionModule tm = torsion_global(phi);
    mpz_ui_pow_ui(r.torsion_found.get_mpz_t(),
                  static_cast<unsigned long>(spec.F->q),
                  static_cast<unsigned long>(tm.size_log_q));
  } catch (const Error& e) {
    // Keep the fibre: the zero point is torsion, so 1 is a proven floor.
    r.torsion_found = 1;
    r.torsion_lower_bound_only = true;
    r.flags = std::string("torsion_lower_bound(") + err_name(e.code()) + ")";
  }
  return r;
}

}  // namespace

FamilyScan family_scan(const FamilySpec& spec, long long beta_height_max,
                       long long N, const PolyA& a_gen, int threads) {
  require(spec.F != nullptr && spec.rank() >= 1, Err::DegeneratePolynomial,
          "family without coefficients");
  require(!a_gen.is_zero(), Err::ZeroArgument, "ideal generator is zero");
  require(N >= 0, Err::NTooSmall, "N must be nonnegative");

  // beta = infinity first, then the finite values by (height, canonical
  // order); fibre results land at fixed indices so the table is identical
  // at every parallelism level.
  std::vector<std::optional<RatFunc>> betas;
  betas.push_back(std::nullopt);
  for (RatFunc& b : enumerate_elements(spec.F, beta_height_max))
    betas.push_back(std::move(b));

  FamilyScan scan;
  scan.fibres.resize(betas.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= betas.size()) return;
      scan.fibres[i] = scan_fibre(spec, betas[i], N, a_gen);
    }
  };
  int n_threads =
      threads > 0 ? threads
                  : static_cast<int>(std::thread::hardware_concurrency());
  n_threads = std::max(1, std::min<int>(n_threads,
                                        static_cast<int>(betas.size())));
  if (n_threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(n_threads));
    for (int i = 0; i < n_threads; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }

  scan.min_mu = Rat(1);
  scan.max_torsion = 0;
  for (const FibreResult& f : scan.fibres) {
    if (!f.valid) continue;
    ++scan.valid_fibres;
    if (f.mu_val < scan.min_mu) scan.min_mu = f.mu_val;
    if (f.torsion_found > scan.max_torsion) scan.max_torsion = f.torsion_found;
  }
  return scan;
}

std::vector<CsvRow> family_table(const FamilyScan& scan) {
  std::vector<CsvRow> rows;
  rows.push_back(
      {"beta", "h_j", "mu", "S_a_size", "torsion_found", "bound", "flags"});
  for (const FibreResult& f : scan.fibres) {
    CsvRow row(7);
    row[0] = f.beta;
    if (f.valid) {
      row[1] = f.h_j.str();
      row[2] = f.mu_val.str();
      row[3] = std::to_string(f.S_a_size);
      row[4] = f.torsion_found.get_str();
      row[5] = f.bound.get_str();
    }
    row[6] = f.flags;
    rows.push_back(std::move(row));
  }
  rows.push_back({"summary", "", scan.min_mu.str(), "",
                  scan.max_torsion.get_str(), "", "summary"});
  return rows;
}

}  // namespace djulia
