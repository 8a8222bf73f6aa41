#include "germcalc/problem.hpp"

#include "germcalc/logarithmic.hpp"

#include <json.hpp>

#include <chrono>
#include <fstream>
#include <sstream>

namespace germ {

namespace {

using ojson = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

/// Splits on `sep`, trimming each piece.  Empty pieces are errors except
/// that a wholly empty input gives an empty list.
std::vector<std::string> split_list(const std::string& text, char sep, int line) {
  std::vector<std::string> out;
  if (trim(text).empty()) return out;
  std::stringstream ss(text);
  std::string piece;
  while (std::getline(ss, piece, sep)) {
    piece = trim(piece);
    if (piece.empty())
      throw ProblemError(std::string("empty entry in '") + sep + "'-separated list", line);
    out.push_back(piece);
  }
  return out;
}

Polynomial parse_in_ring(const std::string& text, const Ring& ring, int line) {
  try {
    return parse_polynomial(text, ring);
  } catch (const ParseError& e) {
    throw ProblemError("in '" + text + "': " + e.what() + " (column " +
                           std::to_string(e.col) + ")",
                       line);
  }
}

std::vector<Polynomial> parse_poly_list(const std::string& text, const Ring& ring,
                                        int line) {
  std::vector<Polynomial> out;
  for (const std::string& piece : split_list(text, ';', line))
    out.push_back(parse_in_ring(piece, ring, line));
  return out;
}

ProblemFile parse_lines(std::istream& in, const std::string& origin) {
  ProblemFile p;
  std::vector<std::string> seen;
  std::string raw;
  int line = 0;
  std::string variety_text, map_text, linear_text, suspension_text;
  int variety_line = 0, map_line = 0, linear_line = 0, suspension_line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string s = trim(raw);
    if (s.empty() || s[0] == '#') continue;
    size_t colon = s.find(':');
    if (colon == std::string::npos)
      throw ProblemError("expected 'key: value' in " + origin, line);
    std::string key = trim(s.substr(0, colon));
    std::string value = trim(s.substr(colon + 1));
    for (const std::string& k : seen)
      if (k == key) throw ProblemError("duplicate key '" + key + "'", line);
    seen.push_back(key);
    if (key == "ring") {
      std::vector<std::string> names = split_list(value, ',', line);
      if (names.empty()) throw ProblemError("ring needs at least one variable", line);
      try {
        p.ring = make_ring(names);
      } catch (const std::invalid_argument& e) {
        throw ProblemError(e.what(), line);
      }
    } else if (key == "variety") {
      variety_text = value;
      variety_line = line;
    } else if (key == "map") {
      map_text = value;
      map_line = line;
    } else if (key == "linear") {
      linear_text = value;
      linear_line = line;
    } else if (key == "suspension") {
      suspension_text = value;
      suspension_line = line;
      p.has_suspension = true;
    } else {
      throw ProblemError("unknown key '" + key + "'", line);
    }
    if (!p.ring && key != "ring")
      throw ProblemError("the ring must be declared before '" + key + "'", line);
  }
  if (!p.ring) throw ProblemError("missing ring declaration in " + origin, 1);

  p.variety = parse_poly_list(variety_text, p.ring, variety_line);
  for (const Polynomial& g : p.variety)
    if (!g.vanishes_at_origin())
      throw ProblemError("variety equation '" + g.str() + "' does not vanish at the origin",
                         variety_line);

  p.map = parse_poly_list(map_text, p.ring, map_line);
  if (p.map.size() > 2)
    throw ProblemError("a map has at most two components", map_line);
  for (const Polynomial& f : p.map)
    if (!f.vanishes_at_origin())
      throw ProblemError("map component '" + f.str() + "' does not vanish at the origin",
                         map_line);

  for (const std::string& sub : split_list(linear_text, ';', linear_line)) {
    std::vector<Polynomial> forms;
    for (const std::string& piece : split_list(sub, ',', linear_line)) {
      Polynomial l = parse_in_ring(piece, p.ring, linear_line);
      if (l.total_degree() != 1 || !l.vanishes_at_origin())
        throw ProblemError("'" + piece + "' is not a linear form", linear_line);
      forms.push_back(std::move(l));
    }
    p.linear.push_back(std::move(forms));
  }

  if (p.has_suspension) {
    std::vector<std::string> halves = split_list(suspension_text, ';', suspension_line);
    if (halves.size() != 2)
      throw ProblemError("suspension needs 'new variables ; h'", suspension_line);
    p.suspension_vars = split_list(halves[0], ',', suspension_line);
    p.suspension_h = halves[1];
  }
  return p;
}

OneForm differential(const Polynomial& f) {
  OneForm w;
  const int n = f.nvars();
  w.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) w.push_back(f.derivative(i));
  return w;
}

ojson colength_json(const Colength& c) {
  if (c.is_finite()) return ojson(c.value());
  return ojson("INFINITE");
}

ojson opt_json(const std::optional<long>& v) {
  if (v) return ojson(*v);
  return ojson("INFINITE");
}

ojson check_json(const IdentityCheck& c) {
  ojson j;
  j["identity"] = c.identity;
  j["statement"] = c.statement;
  j["left"] = opt_json(c.left);
  j["right"] = opt_json(c.right);
  j["holds"] = c.holds;
  j["assumptions"] = c.assumptions;
  return j;
}

const char* kIcisAssumed = "X is an isolated complete intersection (assumed)";
const char* kAFinite = "f is finitely determined on X (assumed)";

std::string seed_certified(uint64_t seed) {
  return "random linear draws at seed " + std::to_string(seed) +
         " certified generic by cross-trial agreement";
}

struct Dispatch {
  ojson payload;  // command-specific fields, merged into the report
  std::string route;
  std::vector<std::string> assumptions;
};

Polynomial first_map_component(const ProblemFile& p, const char* command) {
  if (p.map.empty())
    throw std::invalid_argument(std::string(command) + " needs a map component");
  return p.map.front();
}

Dispatch dispatch(const std::string& command, const ProblemFile& p, const RunConfig& cfg,
                  const ComputeLimits& lim) {
  Dispatch d;
  const bool smooth = p.variety.empty();
  if (command == "milnor") {
    Polynomial target(p.ring);
    if (smooth && p.map.size() == 1)
      target = p.map.front();
    else if (!smooth && p.variety.size() == 1 && p.map.empty())
      target = p.variety.front();
    else
      throw std::invalid_argument(
          "milnor needs exactly one hypersurface germ: a single variety equation with "
          "no map, or a single map component with no variety");
    d.payload["value"] = colength_json(milnor_hypersurface(target, lim));
    d.route = "colength of the Jacobian ideal";
  } else if (command == "milnor-restricted") {
    if (p.map.empty())
      throw std::invalid_argument("milnor-restricted needs at least one map component");
    VarietyGerm x = p.variety_germ();
    ojson values = ojson::array();
    for (const Polynomial& f : p.map)
      values.push_back(colength_json(milnor_restricted(x, f, lim)));
    d.payload["values"] = values;
    d.route = "colength of I_X plus the maximal minors of the stacked Jacobian";
    if (!smooth) d.assumptions = {kIcisAssumed};
  } else if (command == "tjurina") {
    d.payload["value"] = colength_json(tjurina_icis(p.variety_germ(), lim));
    d.route = "module colength of the Jacobian columns plus I_X multiples of the units";
    if (!smooth) d.assumptions = {kIcisAssumed};
  } else if (command == "br" || command == "br-rel") {
    Polynomial f = first_map_component(p, command.c_str());
    const bool relative = command == "br-rel";
    d.payload["value"] =
        colength_json(bruce_roberts(f, p.variety_germ(), relative, lim));
    d.route = relative ? "colength of df(Theta_X) + I_X" : "colength of df(Theta_X)";
    if (!smooth) d.assumptions = {kIcisAssumed};
  } else if (command == "chern-index") {
    if (p.linear.empty())
      throw std::invalid_argument("chern-index needs a linear block");
    std::vector<std::vector<OneForm>> subs;
    for (const auto& sub : p.linear) {
      std::vector<OneForm> forms;
      for (const Polynomial& l : sub) forms.push_back(differential(l));
      subs.push_back(std::move(forms));
    }
    d.payload["value"] = colength_json(
        chern_index(p.variety_germ(), OneFormCollection(p.ring, std::move(subs)), lim));
    d.route = "colength of I_X plus the stacked minor ideals of the collection";
    if (!smooth) d.assumptions = {kIcisAssumed};
  } else if (command == "chern") {
    if (p.map.size() != 2)
      throw std::invalid_argument("chern needs a two-component map");
    VarietyGerm x = p.variety_germ();
    MapGerm f(p.ring, p.map);
    Polynomial delta = delta_determinant(MapGerm(p.ring, p.variety), f);
    OneForm df1 = differential(p.map[0]), df2 = differential(p.map[1]),
            dd = differential(delta);
    OneFormCollection w1(p.ring, {{df1, df2}, {df1, dd}});
    OneFormCollection w2(p.ring, {{df1, df2}, {df2, dd}});
    ojson values = ojson::array();
    values.push_back(colength_json(chern_number(x, w1, cfg.seed, 3, lim)));
    values.push_back(colength_json(chern_number(x, w2, cfg.seed, 3, lim)));
    d.payload["values"] = values;
    d.route = "collection index minus the certified generic linear index";
    d.assumptions = {kAFinite, seed_certified(cfg.seed)};
    if (!smooth) d.assumptions.insert(d.assumptions.begin(), kIcisAssumed);
  } else if (command == "cusps") {
    if (p.map.empty()) throw std::invalid_argument("cusps needs a map");
    d.payload["value"] =
        colength_json(cusps_count(p.variety_germ(), MapGerm(p.ring, p.map), lim));
    d.route = "colength of I_X plus the signed maximal minors of the full Jacobian stack";
    d.assumptions = {kAFinite};
    if (!smooth) d.assumptions.insert(d.assumptions.begin(), kIcisAssumed);
  } else if (command == "lcv-cm") {
    VarietyGerm x = p.variety_germ();
    TangentModule theta = tangent_module(x, lim);
    CohenMacaulayReport rep = cohen_macaulay_report(lcv_minus_ideal(x, theta), lim);
    d.payload["dim"] = rep.dim;
    d.payload["depth"] = rep.depth;
    d.payload["is_cm"] = rep.is_cm;
    d.route = "dimension and depth of the relative logarithmic characteristic ideal";
    if (!smooth) d.assumptions = {kIcisAssumed};
  } else if (command == "identities") {
    if (p.map.size() != 2)
      throw std::invalid_argument("identities needs a two-component map");
    std::vector<IdentityCheck> checks =
        identity_report(p.variety_germ(), MapGerm(p.ring, p.map), cfg.seed, 3, lim);
    ojson arr = ojson::array();
    bool all = true;
    for (const IdentityCheck& c : checks) {
      arr.push_back(check_json(c));
      all = all && c.holds;
    }
    d.payload["checks"] = arr;
    d.payload["all_hold"] = all;
    d.route = "both sides of every identity along independent routes";
  } else if (command == "suspension-check") {
    if (!p.has_suspension)
      throw std::invalid_argument("suspension-check needs a suspension block");
    Polynomial f = first_map_component(p, "suspension-check");
    IdentityCheck c = suspension_check(p.variety_germ(), f, p.suspension_vars,
                                       p.suspension_h, lim);
    d.payload["checks"] = ojson::array({check_json(c)});
    d.payload["all_hold"] = c.holds;
    d.route = "relative number of the suspension vs the product of the factors";
  } else {
    throw std::invalid_argument("unknown command '" + command + "'");
  }
  return d;
}

std::string digest_of(const std::string& command, const ProblemFile& p,
                      const RunConfig& cfg) {
  std::vector<std::string> parts{command, std::to_string(cfg.seed)};
  for (int i = 0; i < p.ring->nvars(); ++i) parts.push_back(p.ring->name(i));
  for (const Polynomial& g : p.variety) parts.push_back(g.str());
  for (const Polynomial& f : p.map) parts.push_back(f.str());
  for (const auto& sub : p.linear)
    for (const Polynomial& l : sub) parts.push_back(l.str());
  for (const std::string& v : p.suspension_vars) parts.push_back(v);
  if (p.has_suspension) parts.push_back(p.suspension_h);
  return inputs_digest(parts);
}

std::string render(const ojson& j) { return j.dump(2) + "\n"; }

}  // namespace

ProblemFile parse_problem_text(const std::string& text, const std::string& origin) {
  std::istringstream in(text);
  return parse_lines(in, origin);
}

ProblemFile load_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ProblemError("cannot read '" + path + "'", 0);
  return parse_lines(in, path);
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = {
      "milnor", "milnor-restricted", "tjurina",    "br",         "br-rel",
      "chern-index", "chern",        "cusps",      "lcv-cm",     "identities",
      "suspension-check"};
  return names;
}

RunResult run_command(const std::string& command, const ProblemFile& p,
                      const RunConfig& cfg) {
  ojson report;
  report["schema"] = "germcalc.report/1";
  report["command"] = command;
  report["seed"] = cfg.seed;
  ComputeLimits lim{cfg.step_budget, cfg.time_budget_s, false};
  auto t0 = std::chrono::steady_clock::now();
  RunResult res;
  try {
    Dispatch d = dispatch(command, p, cfg, lim);
    for (auto& [k, v] : d.payload.items()) report[k] = v;
    report["route"] = d.route;
    report["assumptions"] = d.assumptions;
    report["inputs_digest"] = digest_of(command, p, cfg);
  } catch (const BudgetExceeded& e) {
    report["error"] = {{"kind", "budget"}, {"message", e.what()}};
    res.exit_code = kExitBudget;
  } catch (const CertificationError& e) {
    report["error"] = {{"kind", "certification"}, {"message", e.what()}};
    res.exit_code = kExitCertification;
  } catch (const ParseError& e) {
    report["error"] = {{"kind", "usage"}, {"message", e.what()}};
    res.exit_code = kExitUsage;
  } catch (const std::invalid_argument& e) {
    report["error"] = {{"kind", "usage"}, {"message", e.what()}};
    res.exit_code = kExitUsage;
  }
  if (cfg.verbose) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    report["timing_ms"] = ms;
  }
  res.json = render(report);
  return res;
}

}  // namespace germ
