#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "germcalc/problem.hpp"

#include <json.hpp>

using namespace germ;
using ojson = nlohmann::ordered_json;

namespace {

ProblemFile text_problem(const std::string& text) {
  return parse_problem_text(text, "inline");
}

ojson parsed(const RunResult& r) { return ojson::parse(r.json); }

const char* kSurfacePair = GERM_FIXTURE_DIR "/surface_pair.germ";

}  // namespace

TEST_CASE("problem files parse into validated germs") {
  ProblemFile p = load_problem_file(kSurfacePair);
  CHECK(p.ring->nvars() == 3);
  CHECK(p.variety.size() == 1);
  CHECK(p.map.size() == 2);
  REQUIRE(p.linear.size() == 2);
  CHECK(p.linear[0].size() == 2);
  CHECK(p.linear[1].size() == 2);
  CHECK(!p.has_suspension);

  ProblemFile s = load_problem_file(GERM_FIXTURE_DIR "/crossing_suspension.germ");
  CHECK(s.has_suspension);
  CHECK(s.suspension_vars == std::vector<std::string>{"w"});
  CHECK(s.suspension_h == "w^2");

  ProblemFile slice = load_problem_file(GERM_FIXTURE_DIR "/cusp_edge_slice.germ");
  CHECK(slice.variety.size() == 2);
  CHECK(slice.map.empty());
}

TEST_CASE("problem file diagnostics carry line numbers") {
  auto line_of = [](const std::string& text) {
    try {
      text_problem(text);
    } catch (const ProblemError& e) {
      return e.line;
    }
    return -1;
  };
  CHECK(line_of("variety: x\nring: x") == 1);          // ring must come first
  CHECK(line_of("ring: x, y\nring: x") == 2);          // duplicate key
  CHECK(line_of("ring: x\nwidth: 3") == 2);            // unknown key
  CHECK(line_of("ring: x\nvariety: x + 1") == 2);      // misses the origin
  CHECK(line_of("ring: x, y\nmap: x ; y ; x + y") == 2);
  CHECK(line_of("ring: x, y\nlinear: x^2") == 2);      // not a linear form
  CHECK(line_of("ring: x, y\nmap: x + ") == 2);        // malformed polynomial
  CHECK(line_of("ring: x, y\nsuspension: w") == 2);    // missing the summand
  CHECK(line_of("just text") == 1);
  CHECK(line_of("") == 1);                             // no ring at all
  CHECK_THROWS_AS(load_problem_file("no/such/file.germ"), ProblemError);
}

TEST_CASE("scalar commands report values and metadata") {
  ProblemFile cusp = text_problem("ring: x, y\nmap: x ; y^3 + x*y");
  RunResult r = run_command("cusps", cusp, {});
  REQUIRE(r.exit_code == kExitSuccess);
  ojson j = parsed(r);
  CHECK(j["schema"] == "germcalc.report/1");
  CHECK(j["command"] == "cusps");
  CHECK(j["seed"] == 1);
  CHECK(j["value"] == 1);
  CHECK(!j["route"].get<std::string>().empty());
  CHECK(!j["assumptions"].empty());
  CHECK(j["inputs_digest"].get<std::string>().size() == 16);
  CHECK(!j.contains("timing_ms"));

  RunResult m = run_command("milnor", text_problem("ring: x, y\nmap: x^3 + y^4"), {});
  CHECK(parsed(m)["value"] == 6);
  RunResult v = run_command("milnor", text_problem("ring: x, y\nvariety: x^3 + y^4"), {});
  CHECK(parsed(v)["value"] == 6);
  RunResult inf = run_command("milnor", text_problem("ring: x, y\nmap: x^2"), {});
  CHECK(parsed(inf)["value"] == "INFINITE");
}

TEST_CASE("paper fixture values through the command surface") {
  ProblemFile p = load_problem_file(kSurfacePair);
  CHECK(parsed(run_command("cusps", p, {}))["value"] == 9);
  ojson mr = parsed(run_command("milnor-restricted", p, {}));
  CHECK(mr["values"] == ojson::array({13, 18}));
  CHECK(parsed(run_command("chern-index", p, {}))["value"] == 13);
  ojson ch = parsed(run_command("chern", p, {}));
  CHECK(ch["values"] == ojson::array({9, 14}));
}

TEST_CASE("identities command aggregates the checks") {
  ProblemFile p = text_problem("ring: x, y\nmap: x ; y^3 + x*y");
  RunResult r = run_command("identities", p, {});
  REQUIRE(r.exit_code == kExitSuccess);
  ojson j = parsed(r);
  CHECK(j["all_hold"] == true);
  CHECK(j["checks"].size() == 7);
  for (const auto& c : j["checks"]) {
    CHECK(c["holds"] == true);
    CHECK(!c["statement"].get<std::string>().empty());
  }
}

TEST_CASE("suspension command checks multiplicativity") {
  ProblemFile p = load_problem_file(GERM_FIXTURE_DIR "/crossing_suspension.germ");
  ojson j = parsed(run_command("suspension-check", p, {}));
  CHECK(j["all_hold"] == true);
  CHECK(j["checks"][0]["left"] == 1);
  CHECK(j["checks"][0]["right"] == 1);
}

TEST_CASE("characteristic variety command reports dimension and depth") {
  ProblemFile p = text_problem("ring: x, y\nvariety: x*y");
  ojson j = parsed(run_command("lcv-cm", p, {}));
  CHECK(j["dim"] == 2);
  CHECK(j["depth"] == 2);
  CHECK(j["is_cm"] == true);
}

TEST_CASE("reports are byte-deterministic for a fixed seed") {
  ProblemFile p = load_problem_file(kSurfacePair);
  RunConfig cfg;
  cfg.seed = 7;
  RunResult a = run_command("identities", p, cfg);
  RunResult b = run_command("identities", p, cfg);
  CHECK(a.json == b.json);
  CHECK(a.exit_code == kExitSuccess);

  RunConfig verbose = cfg;
  verbose.verbose = true;
  ojson j = parsed(run_command("cusps", p, verbose));
  CHECK(j.contains("timing_ms"));
}

TEST_CASE("usage problems exit with code 2") {
  ProblemFile p = text_problem("ring: x, y\nmap: x ; y^3 + x*y");
  RunResult unknown = run_command("frobnicate", p, {});
  CHECK(unknown.exit_code == kExitUsage);
  CHECK(parsed(unknown)["error"]["kind"] == "usage");

  CHECK(run_command("chern-index", p, {}).exit_code == kExitUsage);   // no linear block
  CHECK(run_command("suspension-check", p, {}).exit_code == kExitUsage);
  CHECK(run_command("br", text_problem("ring: x\nvariety: x"), {}).exit_code == kExitUsage);
  ProblemFile both = text_problem("ring: x, y\nvariety: x*y\nmap: x + y");
  CHECK(run_command("milnor", both, {}).exit_code == kExitUsage);
}

TEST_CASE("budget exhaustion exits with code 3") {
  ProblemFile p = load_problem_file(kSurfacePair);
  RunConfig cfg;
  cfg.step_budget = 5;
  RunResult r = run_command("cusps", p, cfg);
  CHECK(r.exit_code == kExitBudget);
  ojson j = parsed(r);
  CHECK(j["error"]["kind"] == "budget");
  CHECK(!j.contains("value"));
}

TEST_CASE("failed genericity certification exits with code 4") {
  // a non-isolated double plane: every linear draw gives an infinite index
  ProblemFile p = text_problem("ring: x, y, z\nvariety: x^2\nmap: x + y ; y + z");
  RunResult r = run_command("identities", p, {});
  CHECK(r.exit_code == kExitCertification);
  CHECK(parsed(r)["error"]["kind"] == "certification");
}
