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

// Python bindings: every operation takes text (module/family/CSV sources,
// places and points as strings) and returns plain dicts, lists and strings,
// so no C++ object crosses the boundary.  Domain errors surface as
// ValueError("<Code>: <detail>").

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <climits>
#include <sstream>

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

namespace py = pybind11;
using namespace djulia;

namespace {

py::list str_list(const std::vector<RatFunc>& xs) {
  py::list out;
  for (const RatFunc& x : xs) out.append(x.str());
  return out;
}

py::list place_list(const std::vector<Place>& ps) {
  py::list out;
  for (const Place& p : ps) out.append(p.str());
  return out;
}

py::list poly_list(const std::vector<PolyA>& fs) {
  py::list out;
  for (const PolyA& f : fs) out.append(poly_str(f, "T"));
  return out;
}

py::dict py_jinv(const std::string& module_text) {
  DrinfeldModule phi = parse_module_text(module_text);
  WeightedPoint j = phi.j_invariant();
  py::dict d;
  d["q"] = phi.field()->q;
  d["rank"] = phi.rank();
  d["j"] = j.str();
  d["weights"] = j.weights();
  d["h_j"] = phi.j_height().str();
  return d;
}

py::dict py_local(const std::string& module_text, const std::string& place) {
  DrinfeldModule phi = parse_module_text(module_text);
  LocalModule lm(phi, parse_place(phi.field(), place));
  const LocalInvariants& li = lm.invariants();
  py::dict d;
  d["place"] = li.v.str();
  d["deg"] = li.d;
  py::list cv;
  for (long long v : li.coeff_val)
    if (v == LLONG_MAX)
      cv.append(py::str("inf"));
    else
      cv.append(v);
  d["coeff_val"] = cv;
  d["m"] = li.m.str();
  d["c_v"] = li.c_v.str();
  d["j_v"] = li.j_v.str();
  d["rho"] = li.rho.str();
  d["B_T_log"] = li.B_T_log.str();
  d["r1"] = li.r1;
  d["s"] = li.s;
  d["good_reduction"] = lm.good_reduction();
  return d;
}

py::dict py_julia(const std::string& module_text, const std::string& place,
                  const std::string& point, long long budget_deg) {
  DrinfeldModule phi = parse_module_text(module_text);
  LocalModule lm(phi, parse_place(phi.field(), place));
  py::dict d;
  if (point.empty()) {
    LocalModule::ComponentModule M = lm.component_module(budget_deg);
    d["complete"] = M.complete;
    d["budget_deg"] = M.budget_deg;
    d["invariant_factors"] = poly_list(M.invariant_factors);
    d["annihilator"] = poly_str(M.annihilator, "T");
    d["size_log_q"] = M.size_log_q;
    d["within_bound"] = lm.component_size_within_bound(M.size_log_q);
    return d;
  }
  RatFunc x = parse_ratfunc(phi.field(), point);
  LocalModule::JuliaResult jr = lm.julia_contains(x, budget_deg);
  d["decided"] = jr.decided;
  d["contained"] = jr.contained;
  if (jr.decided && jr.contained) d["witness"] = poly_str(jr.witness, "T");
  if (jr.decided && !jr.contained) d["escape_step"] = jr.escape_step;
  if (!x.is_zero()) {
    LocalModule::HeightParts hp = lm.decompose_height(x);
    d["lambda"] = hp.lambda.str();
    d["bounded"] = hp.bounded.str();
    d["excess"] = hp.excess.str();
  }
  return d;
}

py::dict py_torsion(const std::string& module_text) {
  TorsionModule tm = torsion_global(parse_module_text(module_text));
  py::dict d;
  d["size_log_q"] = tm.size_log_q;
  d["invariant_factors"] = poly_list(tm.invariant_factors);
  d["annihilator"] = poly_str(tm.annihilator, "T");
  d["points"] = str_list(tm.points);
  return d;
}

py::dict py_mu(const std::string& module_text, long long N,
               const std::string& ideal) {
  DrinfeldModule phi = parse_module_text(module_text);
  PolyA a = parse_monic_poly(phi.field(), ideal);
  MuResult m = mu(phi, N, a);
  py::dict d;
  d["mu"] = m.mu.str();
  d["S_bad"] = place_list(m.S_bad);
  d["S_a"] = place_list(m.S_a);
  d["witness_S"] = place_list(m.witness_S);
  py::dict jt;
  for (const auto& [v, j] : m.per_place_j) jt[py::str(v.str())] = j.str();
  d["per_place_j"] = jt;
  d["torsion_bound"] = torsion_bound(phi.rank(), N, a).get_str();
  AdelicReport rep = adelic_check(phi, a);
  d["adelic_holds"] = rep.holds;
  d["adelic_lhs"] = rep.lhs.str();
  d["adelic_rhs"] = rep.rhs.str();
  return d;
}

py::dict py_tate(const std::string& module_text, const std::string& place,
                 const std::vector<std::string>& gens, long long prec,
                 int exp_n, long long budget_deg) {
  DrinfeldModule psi = parse_module_text(module_text);
  Place v = parse_place(psi.field(), place);
  std::vector<RatFunc> ws;
  for (const std::string& s : gens) ws.push_back(parse_ratfunc(psi.field(), s));
  TateLattice red = lattice_reduce(TateLattice(psi, v, ws, prec),
                                   budget_deg < 0 ? 2 : budget_deg);
  py::dict d;
  d["place"] = v.str();
  d["stable_rank"] = red.stable_rank();
  d["lattice_rank"] = red.rank();
  py::list ov;
  for (const LaurentSeries& w : red.generators()) ov.append(w.val());
  d["omega_val"] = ov;
  UniformizedModule u = uniformize(red, exp_n);
  d["residual_prec"] = u.residual_prec;
  py::list cs;
  for (const LaurentSeries& c : u.coeffs) cs.append(c.str());
  d["coeffs"] = cs;
  return d;
}

std::string py_family_csv(const std::string& family_text, long long height_max,
                          long long N, const std::string& ideal, int threads) {
  FamilySpec spec = parse_family_text(family_text);
  PolyA a = parse_monic_poly(spec.F, ideal);
  return csv_emit(family_table(family_scan(spec, height_max, N, a, threads)));
}

std::string py_elliptic_csv(const std::string& csv_text, long long n,
                            long long N) {
  std::vector<CurveRecord> recs = ingest_rows(csv_parse(csv_text));
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
      row.push_back(theorem_check(rec, n).holds ? "true" : "false");
    } catch (const Error& e) {
      row.push_back(err_name(e.code()));
    }
    rows.push_back(std::move(row));
  }
  return csv_emit(rows);
}

py::dict py_selftest(unsigned seed, const std::vector<int>& only) {
  std::vector<CheckResult> results = run_acceptance(seed, only);
  std::ostringstream report;
  bool passed = report_acceptance(results, report);
  py::dict d;
  d["passed"] = passed;
  d["report"] = report.str();
  return d;
}

}  // namespace

PYBIND11_MODULE(_djulia, m) {
  m.doc() = "arithmetic dynamics of Drinfeld F_q[T]-modules over F_q(t)";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(PyExc_ValueError, e.what());
    }
  });

  m.def("jinv", &py_jinv, py::arg("module_text"),
        "j-invariant, weights and j-height of a module given as text");
  m.def("local_invariants", &py_local, py::arg("module_text"),
        py::arg("place"), "valuation invariants at one place");
  m.def("julia", &py_julia, py::arg("module_text"), py::arg("place"),
        py::arg("point") = "", py::arg("budget_deg") = -1,
        "component module at a place, or membership of a given point");
  m.def("torsion", &py_torsion, py::arg("module_text"),
        "global torsion module with its points and invariant factors");
  m.def("mu", &py_mu, py::arg("module_text"), py::arg("N") = 0,
        py::arg("ideal") = "T",
        "global mu, the bad/obstructed places and the adelic check");
  m.def("tate", &py_tate, py::arg("module_text"), py::arg("place"),
        py::arg("gens"), py::arg("prec") = 96, py::arg("exp_n") = 2,
        py::arg("budget_deg") = -1,
        "reduce a lattice over a good-reduction module and uniformize");
  m.def("family_csv", &py_family_csv, py::arg("family_text"),
        py::arg("height_max"), py::arg("N") = 0, py::arg("ideal") = "T",
        py::arg("threads") = 0,
        "scan a one-parameter family; returns the CSV table as a string");
  m.def("elliptic_csv", &py_elliptic_csv, py::arg("csv_text"), py::arg("n"),
        py::arg("N") = 0,
        "Szpiro ratios and theorem checks for curve records given as CSV");
  m.def("selftest", &py_selftest, py::arg("seed") = 1,
        py::arg("only") = std::vector<int>{},
        "run the acceptance corpus; returns {'passed': bool, 'report': str}");
}
