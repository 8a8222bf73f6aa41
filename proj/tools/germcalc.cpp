#include "germcalc/problem.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int emit(const germ::RunResult& res, const std::string& json_out) {
  if (json_out.empty()) {
    std::cout << res.json;
  } else {
    std::ofstream out(json_out);
    if (!out) {
      std::cerr << "cannot write '" << json_out << "'\n";
      return germ::kExitUsage;
    }
    out << res.json;
  }
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact local invariants of analytic germs"};
  app.require_subcommand(1);

  std::string file, json_out;
  germ::RunConfig cfg;
  app.add_option("--seed", cfg.seed, "seed for all random draws")->capture_default_str();
  app.add_option("--step-budget", cfg.step_budget, "max reduction steps, 0 = unlimited")
      ->capture_default_str();
  app.add_option("--time-budget", cfg.time_budget_s, "max seconds, 0 = unlimited")
      ->capture_default_str();
  app.add_option("--json-out", json_out, "write the report here instead of stdout");
  app.add_flag("--verbose", cfg.verbose, "add timing to the report");

  std::vector<CLI::App*> subs;
  for (const std::string& name : germ::command_names()) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("file", file, "problem file")->required();
    subs.push_back(sub);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : germ::kExitUsage;
  }

  germ::ProblemFile problem;
  try {
    problem = germ::load_problem_file(file);
  } catch (const germ::ProblemError& e) {
    std::cerr << file << ":" << e.line << ": " << e.what() << "\n";
    return germ::kExitUsage;
  }

  for (CLI::App* sub : subs)
    if (sub->parsed()) return emit(germ::run_command(sub->get_name(), problem, cfg), json_out);
  return germ::kExitUsage;
}
