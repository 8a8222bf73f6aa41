#include "germcalc/problem.hpp"

#include "germcalc/logarithmic.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

namespace py = pybind11;
using namespace germ;

namespace {

Ring ring_of(const std::vector<std::string>& names) { return make_ring(names); }

std::vector<Polynomial> parse_all(const Ring& r, const std::vector<std::string>& texts) {
  std::vector<Polynomial> out;
  out.reserve(texts.size());
  for (const std::string& t : texts) out.push_back(parse_polynomial(t, r));
  return out;
}

std::optional<long> as_opt(const Colength& c) {
  if (c.is_finite()) return c.value();
  return std::nullopt;
}

OneForm differential(const Polynomial& f) {
  OneForm w;
  for (int i = 0; i < f.nvars(); ++i) w.push_back(f.derivative(i));
  return w;
}

VarietyGerm variety_of(const std::vector<std::string>& vars,
                       const std::vector<std::string>& equations) {
  Ring r = ring_of(vars);
  return VarietyGerm(r, parse_all(r, equations), true);
}

py::dict check_dict(const IdentityCheck& c) {
  py::dict d;
  d["identity"] = c.identity;
  d["statement"] = c.statement;
  d["left"] = c.left ? py::cast(*c.left) : py::none();
  d["right"] = c.right ? py::cast(*c.right) : py::none();
  d["holds"] = c.holds;
  d["assumptions"] = c.assumptions;
  return d;
}

}  // namespace

PYBIND11_MODULE(_germcalc, m) {
  m.doc() = "Exact local invariants of analytic germs";

  py::register_exception<BudgetExceeded>(m, "BudgetError");
  py::register_exception<CertificationError>(m, "CertificationError");
  py::register_exception<ParseError>(m, "PolynomialParseError", PyExc_ValueError);
  py::register_exception<ProblemError>(m, "ProblemFileError", PyExc_ValueError);

  m.def("commands", [] { return command_names(); },
        "names accepted by run_report");

  m.def(
      "run_report",
      [](const std::string& command, const std::string& problem_text, uint64_t seed,
         uint64_t step_budget, double time_budget, bool verbose) {
        ProblemFile p = parse_problem_text(problem_text, "<python>");
        RunConfig cfg{seed, step_budget, time_budget, verbose};
        RunResult r = run_command(command, p, cfg);
        return py::make_tuple(r.exit_code, r.json);
      },
      py::arg("command"), py::arg("problem_text"), py::arg("seed") = 1,
      py::arg("step_budget") = 0, py::arg("time_budget") = 0.0,
      py::arg("verbose") = false,
      "runs one command against problem-file text; returns (exit_code, json)");

  m.def(
      "milnor",
      [](const std::vector<std::string>& vars, const std::string& f) {
        Ring r = ring_of(vars);
        return as_opt(milnor_hypersurface(parse_polynomial(f, r)));
      },
      py::arg("vars"), py::arg("f"),
      "Milnor number of an isolated hypersurface germ; None when infinite");

  m.def(
      "milnor_restricted",
      [](const std::vector<std::string>& vars, const std::vector<std::string>& equations,
         const std::string& f) {
        VarietyGerm x = variety_of(vars, equations);
        return as_opt(milnor_restricted(x, parse_polynomial(f, x.ring)));
      },
      py::arg("vars"), py::arg("equations"), py::arg("f"),
      "Milnor number of f restricted to the variety");

  m.def(
      "tjurina",
      [](const std::vector<std::string>& vars, const std::vector<std::string>& equations) {
        return as_opt(tjurina_icis(variety_of(vars, equations)));
      },
      py::arg("vars"), py::arg("equations"),
      "Tjurina number of a complete intersection germ");

  m.def(
      "bruce_roberts",
      [](const std::vector<std::string>& vars, const std::vector<std::string>& equations,
         const std::string& f, bool relative) {
        VarietyGerm x = variety_of(vars, equations);
        return as_opt(bruce_roberts(parse_polynomial(f, x.ring), x, relative));
      },
      py::arg("vars"), py::arg("equations"), py::arg("f"), py::arg("relative") = false,
      "Bruce-Roberts number of f with respect to the variety");

  m.def(
      "chern_index",
      [](const std::vector<std::string>& vars, const std::vector<std::string>& equations,
         const std::vector<std::vector<std::string>>& collections) {
        VarietyGerm x = variety_of(vars, equations);
        std::vector<std::vector<OneForm>> subs;
        for (const auto& sub : collections) {
          std::vector<OneForm> forms;
          for (const std::string& g : sub)
            forms.push_back(differential(parse_polynomial(g, x.ring)));
          subs.push_back(std::move(forms));
        }
        return as_opt(chern_index(x, OneFormCollection(x.ring, std::move(subs))));
      },
      py::arg("vars"), py::arg("equations"), py::arg("collections"),
      "index of the collection of differentials of the given functions");

  m.def(
      "chern_numbers",
      [](const std::vector<std::string>& vars, const std::vector<std::string>& equations,
         const std::string& f1, const std::string& f2, uint64_t seed) {
        VarietyGerm x = variety_of(vars, equations);
        MapGerm f(x.ring, parse_all(x.ring, {f1, f2}));
        Polynomial delta = delta_determinant(MapGerm(x.ring, x.generators), f);
        OneForm d1 = differential(f.components[0]), d2 = differential(f.components[1]),
                dd = differential(delta);
        OneFormCollection w1(x.ring, {{d1, d2}, {d1, dd}});
        OneFormCollection w2(x.ring, {{d1, d2}, {d2, dd}});
        return py::make_tuple(as_opt(chern_number(x, w1, seed)),
                              as_opt(chern_number(x, w2, seed)));
      },
      py::arg("vars"), py::arg("equations"), py::arg("f1"), py::arg("f2"),
      py::arg("seed") = 1,
      "Chern numbers of the two cusp collections of the map (f1, f2)");

  m.def(
      "cusps",
      [](const std::vector<std::string>& vars, const std::vector<std::string>& equations,
         const std::string& f1, const std::string& f2) {
        VarietyGerm x = variety_of(vars, equations);
        return as_opt(cusps_count(x, MapGerm(x.ring, parse_all(x.ring, {f1, f2}))));
      },
      py::arg("vars"), py::arg("equations"), py::arg("f1"), py::arg("f2"),
      "number of cusps of a stable perturbation of (f1, f2) restricted to the variety");

  m.def(
      "lcv_cm",
      [](const std::vector<std::string>& vars, const std::vector<std::string>& equations) {
        VarietyGerm x = variety_of(vars, equations);
        TangentModule theta = tangent_module(x);
        CohenMacaulayReport rep = cohen_macaulay_report(lcv_minus_ideal(x, theta));
        py::dict d;
        d["dim"] = rep.dim;
        d["depth"] = rep.depth;
        d["is_cm"] = rep.is_cm;
        return d;
      },
      py::arg("vars"), py::arg("equations"),
      "dimension, depth and Cohen-Macaulayness of the relative logarithmic "
      "characteristic variety");

  m.def(
      "identities",
      [](const std::vector<std::string>& vars, const std::vector<std::string>& equations,
         const std::string& f1, const std::string& f2, uint64_t seed) {
        VarietyGerm x = variety_of(vars, equations);
        MapGerm f(x.ring, parse_all(x.ring, {f1, f2}));
        py::list out;
        for (const IdentityCheck& c : identity_report(x, f, seed))
          out.append(check_dict(c));
        return out;
      },
      py::arg("vars"), py::arg("equations"), py::arg("f1"), py::arg("f2"),
      py::arg("seed") = 1, "cross-identities between the invariants of the map");

  m.def(
      "suspension_check",
      [](const std::vector<std::string>& vars, const std::vector<std::string>& equations,
         const std::string& f, const std::vector<std::string>& new_vars,
         const std::string& h) {
        VarietyGerm x = variety_of(vars, equations);
        return check_dict(suspension_check(x, parse_polynomial(f, x.ring), new_vars, h));
      },
      py::arg("vars"), py::arg("equations"), py::arg("f"), py::arg("new_vars"),
      py::arg("h"), "multiplicativity of the relative number under suspension");
}
