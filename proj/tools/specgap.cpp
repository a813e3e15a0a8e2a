// specgap: spectral gaps of -d^2/dx^2 + v on (-L/2, L/2) with Dirichlet walls.
//
//   specgap sweep --potential step --v0 1 --b 1 --l-min 12.5 --l-max 3200 --out step.csv
//   specgap fit --in step.csv
//   specgap check --potential tail

#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "specgap/cli.hpp"
#include "specgap/config.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Spectral gap laboratory for 1D Dirichlet Schrodinger operators"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  app.add_option("--config", config_path, "key = value configuration file");

  // Flag name -> configuration key. Flags override the file.
  const std::map<std::string, std::string> flag_keys{
      {"--potential", "potential.family"}, {"--v0", "potential.v0"},
      {"--b", "potential.b"},              {"--C", "potential.C"},
      {"--alpha", "potential.alpha"},      {"--s", "potential.s"},
      {"--segments", "potential.segments"}, {"--L", "problem.L"},
      {"--t", "problem.t"},                {"--frame", "problem.frame"},
      {"--l-min", "sweep.l_min"},          {"--l-max", "sweep.l_max"},
      {"--l-ratio", "sweep.l_ratio"},      {"--resolution", "solver.resolution"},
      {"--k", "solver.k"},                 {"--workers", "solver.workers"},
      {"--t-grid", "hf.t_grid"},           {"--fit-min", "fit.l_min"},
      {"--fit-max", "fit.l_max"},          {"--max-ratio", "check.max_ratio"},
      {"--out", "output.path"},            {"--in", "input.path"},
  };
  std::map<std::string, std::optional<std::string>> flag_values;
  for (const auto& [flag, key] : flag_keys) app.add_option(flag, flag_values[flag], key);

  const char* subcommands[][2] = {
      {"solve", "lowest eigenvalues and gap of one problem"},
      {"sweep", "gap over a geometric L grid, written as CSV"},
      {"fit", "decay exponent of a sweep CSV"},
      {"check", "sweep and run every bound applicable to the potential"},
      {"step-analytic", "step potential gap from the matching equations"},
      {"delta", "gap with a delta interaction of strength L"},
      {"hf", "Hellmann-Feynman gap derivative along t v, written as CSV"},
  };
  for (const auto& [name, help] : subcommands) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "specgap: " << e.what() << "\n";
    return specgap::kExitUsage;
  }

  specgap::RunConfig cfg;
  try {
    if (!config_path.empty()) cfg = specgap::load_config_file(config_path);
    for (const auto& [flag, value] : flag_values)
      if (value) cfg.set(flag_keys.at(flag), *value);
  } catch (const std::invalid_argument& e) {
    std::cerr << "specgap: " << e.what() << "\n";
    return specgap::kExitUsage;
  }

  const std::string sub = app.get_subcommands().front()->get_name();
  return specgap::run(sub, cfg, std::cout, std::cerr);
}
