#pragma once

#include "germcalc/invariants.hpp"

#include <string>
#include <vector>

namespace germ {

/// Raised on malformed problem files; line numbers are 1-based.
struct ProblemError : std::runtime_error {
  ProblemError(const std::string& what, int line_)
      : std::runtime_error(what), line(line_) {}
  int line;
};

/// One batch computation setup: the ring, the variety under study and the
/// optional blocks individual commands need.  Parsed from line-oriented
/// key:value text (see load_problem_file).
struct ProblemFile {
  Ring ring;
  std::vector<Polynomial> variety;  // empty = the smooth ambient germ
  std::vector<Polynomial> map;      // 0, 1 or 2 components, vanishing at 0
  // explicit linear functions, one inner list per subcollection
  std::vector<std::vector<Polynomial>> linear;
  std::vector<std::string> suspension_vars;  // fresh variable names
  std::string suspension_h;                  // suspending summand, in the new variables
  bool has_suspension = false;

  VarietyGerm variety_germ() const { return VarietyGerm(ring, variety, true); }
};

/// Reads and validates a problem file.
///
///   # comment lines and blank lines are skipped
///   ring: x, y, z
///   variety: x^3 + x^2*y^2 + y^7 + z^2        (generators separated by ;)
///   map: y + z^2 ; x^2 + x*y + y^2            (1 or 2 components)
///   linear: x+y, x-y+3*z ; x+y-z, x-y+5*z     (subcollections by ;, forms by ,)
///   suspension: w ; w^2                        (new variables, then h)
///
/// The ring line must come first; every key appears at most once; all
/// polynomials must parse in the declared ring; map components and variety
/// generators vanish at the origin; linear entries are linear forms.
/// Throws ProblemError with the offending line number.
ProblemFile load_problem_file(const std::string& path);

/// Same grammar from an in-memory string; `origin` names the source in
/// diagnostics.
ProblemFile parse_problem_text(const std::string& text, const std::string& origin);

/// Knobs shared by every command.  All randomness flows from the seed; the
/// default seed is 1.  Zero budgets mean unlimited.
struct RunConfig {
  uint64_t seed = 1;
  uint64_t step_budget = 0;
  double time_budget_s = 0.0;
  bool verbose = false;  // adds timing_ms to the report
};

/// Exit codes of run_command, also used by the command-line tool.
enum ExitCode : int {
  kExitSuccess = 0,
  kExitUsage = 2,
  kExitBudget = 3,
  kExitCertification = 4,
};

/// JSON report text (newline-terminated) plus the process exit code.
struct RunResult {
  std::string json;
  int exit_code = kExitSuccess;
};

/// Names accepted by run_command, in the order `list` reports them.
const std::vector<std::string>& command_names();

/// Executes one command against a loaded problem and renders the report.
/// Output bytes are identical for identical (problem, command, cfg) except
/// that cfg.verbose adds a timing_ms field.  Budget exhaustion and failed
/// genericity certification come back as structured error reports with
/// their distinct exit codes; a problem file missing the block a command
/// needs is a usage error.
RunResult run_command(const std::string& command, const ProblemFile& p,
                      const RunConfig& cfg);

}  // namespace germ
