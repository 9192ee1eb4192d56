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

// djulia: arithmetic dynamics of Drinfeld F_q[T]-modules over F_q(t).
// Exit codes: 0 success, 1 domain error (one `error: <code>: <detail>`
// line on stderr), 2 usage error.  Output is deterministic: places sorted,
// rationals printed as p/q.

#include <algorithm>
#include <climits>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "djulia/acceptance.hpp"
#include "djulia/csv.hpp"
#include "djulia/elliptic.hpp"
#include "djulia/errors.hpp"
#include "djulia/family.hpp"
#include "djulia/globalmu.hpp"
#include "djulia/localdyn.hpp"
#include "djulia/parse.hpp"
#include "djulia/tate.hpp"
#include "djulia/torsion.hpp"

namespace {

using namespace djulia;

struct GlobalOpts {
  long long prec = 96;
  long long budget_deg = -1;
  unsigned seed = 1;
};

std::string bool_s(bool b) { return b ? "true" : "false"; }

std::string places_s(const std::vector<Place>& ps) {
  std::string out = "[";
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) out += ", ";
    out += ps[i].str();
  }
  return out + "]";
}

std::string factors_s(const std::vector<PolyA>& fs) {
  std::string out = "[";
  for (size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ", ";
    out += poly_str(fs[i], "T");
  }
  return out + "]";
}

int cmd_jinv(const std::string& module_path) {
  DrinfeldModule phi = parse_module_file(module_path);
  WeightedPoint j = phi.j_invariant();
  std::cout << "q = " << phi.field()->q << "\n";
  std::cout << "rank = " << phi.rank() << "\n";
  std::cout << "j = " << j.str() << "\n";
  std::cout << "weights = [";
  for (size_t i = 0; i < j.weights().size(); ++i)
    std::cout << (i ? ", " : "") << j.weights()[i];
  std::cout << "]\n";
  std::cout << "h_j = " << phi.j_height().str() << "\n";
  return 0;
}

int cmd_local(const std::string& module_path, const std::string& place_str) {
  DrinfeldModule phi = parse_module_file(module_path);
  Place v = parse_place(phi.field(), place_str);
  LocalModule lm(phi, v);
  const LocalInvariants& li = lm.invariants();
  std::cout << "place = " << li.v.str() << "\n";
  std::cout << "deg = " << li.d << "\n";
  std::cout << "coeff_val = [";
  for (size_t i = 0; i < li.coeff_val.size(); ++i) {
    std::cout << (i ? ", " : "");
    if (li.coeff_val[i] == LLONG_MAX)
      std::cout << "inf";
    else
      std::cout << li.coeff_val[i];
  }
  std::cout << "]\n";
  std::cout << "m = " << li.m.str() << "\n";
  std::cout << "c_v = " << li.c_v.str() << "\n";
  std::cout << "j_v = " << li.j_v.str() << "\n";
  std::cout << "rho = " << li.rho.str() << "\n";
  std::cout << "B_T_log = " << li.B_T_log.str() << "\n";
  std::cout << "r1 = " << li.r1 << "\n";
  std::cout << "s = " << li.s << "\n";
  std::cout << "vj = " << li.vj << "\n";
  std::cout << "nu_rho = " << li.nu_rho << "\n";
  std::cout << "nu_B = " << li.nu_B << "\n";
  std::cout << "good_reduction = " << bool_s(lm.good_reduction()) << "\n";
  return 0;
}

int cmd_julia(const std::string& module_path, const std::string& place_str,
              const std::string& point_str, const GlobalOpts& g) {
  DrinfeldModule phi = parse_module_file(module_path);
  Place v = parse_place(phi.field(), place_str);
  LocalModule lm(phi, v);
  if (point_str.empty()) {
    LocalModule::ComponentModule M = lm.component_module(g.budget_deg);
    std::cout << "complete = " << bool_s(M.complete) << "\n";
    std::cout << "budget_deg = " << M.budget_deg << "\n";
    std::cout << "invariant_factors = " << factors_s(M.invariant_factors)
              << "\n";
    std::cout << "annihilator = " << poly_str(M.annihilator, "T") << "\n";
    std::cout << "size_log_q = " << M.size_log_q << "\n";
    std::cout << "size_bound_exponent = " << lm.component_size_bound_exponent()
              << "\n";
    std::cout << "within_bound = "
              << bool_s(lm.component_size_within_bound(M.size_log_q)) << "\n";
    return 0;
  }
  RatFunc x = parse_ratfunc(phi.field(), point_str);
  LocalModule::JuliaResult jr = lm.julia_contains(x, g.budget_deg);
  std::cout << "decided = " << bool_s(jr.decided) << "\n";
  std::cout << "contained = " << bool_s(jr.contained) << "\n";
  if (jr.decided && jr.contained)
    std::cout << "witness = " << poly_str(jr.witness, "T") << "\n";
  if (jr.decided && !jr.contained)
    std::cout << "escape_step = " << jr.escape_step << "\n";
  if (!x.is_zero()) {
    LocalModule::HeightParts hp = lm.decompose_height(x);
    std::cout << "lambda = " << hp.lambda.str() << "\n";
    std::cout << "bounded = " << hp.bounded.str() << "\n";
    std::cout << "excess = " << hp.excess.str() << "\n";
  }
  return 0;
}

int cmd_torsion(const std::string& module_path) {
  DrinfeldModule phi = parse_module_file(module_path);
  TorsionModule tm = torsion_global(phi);
  std::cout << "size_log_q = " << tm.size_log_q << "\n";
  std::cout << "invariant_factors = " << factors_s(tm.invariant_factors)
            << "\n";
  std::cout << "annihilator = " << poly_str(tm.annihilator, "T") << "\n";
  std::cout << "points = [";
  for (size_t i = 0; i < tm.points.size(); ++i)
    std::cout << (i ? ", " : "") << tm.points[i].str();
  std::cout << "]\n";
  return 0;
}

int cmd_mu(const std::string& module_path, long long N,
           const std::string& ideal_str) {
  DrinfeldModule phi = parse_module_file(module_path);
  PolyA a = parse_monic_poly(phi.field(), ideal_str);
  MuResult m = mu(phi, N, a);
  std::cout << "mu = " << m.mu.str() << "\n";
  std::cout << "S_bad = " << places_s(m.S_bad) << "\n";
  std::cout << "S_a = " << places_s(m.S_a) << "\n";
  std::cout << "witness_S = " << places_s(m.witness_S) << "\n";
  std::vector<std::pair<Place, Rat>> table = m.per_place_j;
  std::sort(table.begin(), table.end(),
            [](const auto& a2, const auto& b2) { return a2.first < b2.first; });
  for (const auto& [v, j] : table)
    std::cout << "j[" << v.str() << "] = " << j.str() << "\n";
  std::cout << "torsion_bound = "
            << torsion_bound(phi.rank(), N, a).get_str() << "\n";
  AdelicReport rep = adelic_check(phi, a);
  std::cout << "adelic_holds = " << bool_s(rep.holds) << "\n";
  std::cout << "adelic_lhs = " << rep.lhs.str() << "\n";
  std::cout << "adelic_rhs = " << rep.rhs.str() << "\n";
  return 0;
}

int cmd_tate(const std::string& module_path, const std::string& place_str,
             const std::vector<std::string>& gen_strs, int exp_n,
             const GlobalOpts& g) {
  DrinfeldModule psi = parse_module_file(module_path);
  Place v = parse_place(psi.field(), place_str);
  std::vector<RatFunc> gens;
  for (const std::string& s : gen_strs)
    gens.push_back(parse_ratfunc(psi.field(), s));
  TateLattice lat(psi, v, gens, g.prec);
  TateLattice red =
      lattice_reduce(lat, g.budget_deg < 0 ? 2 : g.budget_deg);
  std::cout << "place = " << v.str() << "\n";
  std::cout << "stable_rank = " << red.stable_rank() << "\n";
  std::cout << "lattice_rank = " << red.rank() << "\n";
  for (size_t i = 0; i < red.generators().size(); ++i)
    std::cout << "omega[" << i
              << "] val = " << red.generators()[i].val() << "\n";
  UniformizedModule u = uniformize(red, exp_n);
  std::cout << "residual_prec = " << u.residual_prec << "\n";
  for (size_t i = 0; i < u.coeffs.size(); ++i)
    std::cout << "c[" << i << "] = " << u.coeffs[i].str() << "\n";
  return 0;
}

int cmd_family(const std::string& family_path, long long height_max,
               long long N, const std::string& ideal_str,
               const std::string& out_path, int threads) {
  FamilySpec spec = parse_family_file(family_path);
  PolyA a = parse_monic_poly(spec.F, ideal_str);
  FamilyScan scan = family_scan(spec, height_max, N, a, threads);
  std::vector<CsvRow> rows = family_table(scan);
  if (out_path.empty())
    std::cout << csv_emit(rows);
  else
    csv_write_file(out_path, rows);
  return 0;
}

int cmd_elliptic(const std::string& csv_path, long long n, long long N) {
  std::vector<CurveRecord> recs = ingest_csv(csv_path);
  std::vector<CsvRow> rows;
  rows.push_back({"label", "sigma", "mu", "check"});
  for (const CurveRecord& rec : recs) {
    CsvRow row;
    row.push_back(rec.label);
    try {
      row.push_back(szpiro_ratio(rec).str());
    } catch (const Error& e) {
      row.push_back(err_name(e.code()));
    }
    row.push_back(mu_elliptic(rec, N, n).str());
    try {
      TheoremCheck tc = theorem_check(rec, n);
      row.push_back(tc.holds ? "true" : "false");
    } catch (const Error& e) {
      row.push_back(err_name(e.code()));
    }
    rows.push_back(std::move(row));
  }
  std::cout << csv_emit(rows);
  return 0;
}

int cmd_selftest(const GlobalOpts& g, const std::vector<int>& only) {
  std::vector<CheckResult> results = run_acceptance(g.seed, only);
  return report_acceptance(results, std::cout) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "arithmetic dynamics of Drinfeld F_q[T]-modules over F_q(t)"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--prec", g.prec, "working precision (uniformizer powers)")
      ->capture_default_str();
  app.add_option("--budget-deg", g.budget_deg,
                 "annihilator degree budget (-1 = derived bound)")
      ->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomized corpora")
      ->capture_default_str();

  auto sub = [&](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  std::string module_path, place_str, point_str, ideal_str = "T";
  std::string family_path, out_path, csv_path;
  std::vector<std::string> gen_strs;
  std::vector<int> only;
  long long N = 0, height_max = 1, n_factorial = 2;
  int exp_n = 2, threads = 0;

  CLI::App* jinv = sub("jinv", "j-invariant and its height");
  jinv->add_option("--module", module_path, "module file")->required();

  CLI::App* local = sub("local", "valuation invariants at one place");
  local->add_option("--module", module_path, "module file")->required();
  local->add_option("--place", place_str, "place: inf or a monic prime in t")
      ->required();

  CLI::App* julia = sub("julia", "component module / Julia membership");
  julia->add_option("--module", module_path, "module file")->required();
  julia->add_option("--place", place_str, "place: inf or a monic prime in t")
      ->required();
  julia->add_option("--point", point_str,
                    "test this point instead of printing the module");

  CLI::App* torsion = sub("torsion", "global torsion module");
  torsion->add_option("--module", module_path, "module file")->required();

  CLI::App* mu_cmd = sub("mu", "global mu and the adelic check");
  mu_cmd->add_option("--module", module_path, "module file")->required();
  mu_cmd->add_option("--N", N, "number of excluded places")
      ->capture_default_str();
  mu_cmd->add_option("--ideal", ideal_str, "monic generator of the ideal")
      ->capture_default_str();

  CLI::App* tate = sub("tate", "reduce a lattice and uniformize");
  tate->add_option("--module", module_path, "good-reduction module file")
      ->required();
  tate->add_option("--place", place_str, "finite place")->required();
  tate->add_option("--gen", gen_strs, "lattice generator (repeatable)")
      ->required();
  tate->add_option("--exp-n", exp_n, "exponential truncation order")
      ->capture_default_str();

  CLI::App* family = sub("family", "scan a one-parameter family to CSV");
  family->add_option("--family", family_path, "family file")->required();
  family->add_option("--height-max", height_max, "max height of the parameter")
      ->required();
  family->add_option("--N", N, "number of excluded places")
      ->capture_default_str();
  family->add_option("--ideal", ideal_str, "monic generator of the ideal")
      ->capture_default_str();
  family->add_option("--out", out_path, "write CSV here instead of stdout");
  family->add_option("--threads", threads, "worker threads (0 = hardware)")
      ->capture_default_str();

  CLI::App* elliptic = sub("elliptic", "Szpiro ratios for curve records");
  elliptic->add_option("--csv", csv_path, "local-data CSV file")->required();
  elliptic->add_option("--n", n_factorial, "test against the ideal (n!)")
      ->required();
  elliptic->add_option("--N", N, "number of excluded places")
      ->capture_default_str();

  CLI::App* selftest = sub("selftest", "run the acceptance corpus");
  selftest->add_option("--only", only, "criterion ids to run (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*jinv) return cmd_jinv(module_path);
    if (*local) return cmd_local(module_path, place_str);
    if (*julia) return cmd_julia(module_path, place_str, point_str, g);
    if (*torsion) return cmd_torsion(module_path);
    if (*mu_cmd) return cmd_mu(module_path, N, ideal_str);
    if (*tate) return cmd_tate(module_path, place_str, gen_strs, exp_n, g);
    if (*family)
      return cmd_family(family_path, height_max, N, ideal_str, out_path,
                        threads);
    if (*elliptic) return cmd_elliptic(csv_path, n_factorial, N);
    if (*selftest) return cmd_selftest(g, only);
  } catch (const djulia::Error& e) {
    std::cerr << "error: " << e.what() << "\n";  // what() = "<Code>: <detail>"
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: Internal: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
