#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "riemwave/cli.hpp"

int main(int argc, char** argv) {
  using namespace riemwave::cli;

  CLI::App app{"Damped wave system in Riemann variables: simulation, sweeps and inequality checks"};
  app.require_subcommand(1);

  RunManifest m;

  auto* simulate = app.add_subcommand("simulate", "Run one configuration");
  simulate->add_option("--config", m.config_path, "Config file")->required();
  simulate->add_option("--out", m.output_dir, "Output directory")->required();

  std::string values;
  auto* sweep = app.add_subcommand("sweep", "Run one configuration per value of a key");
  sweep->add_option("--config", m.config_path, "Base config file")->required();
  sweep->add_option("--vary", m.vary, "lambda, eps0, kappa, p, n_cells or perturbation.amplitude")->required();
  sweep->add_option("--values", values, "Comma-separated values")->required();
  sweep->add_option("--out", m.output_dir, "Output directory")->required();
  sweep->add_option("--jobs", m.jobs, "Concurrent sub-runs (0 = hardware threads)");

  auto* lemmas = app.add_subcommand("verify-lemmas", "Randomized and solver-based inequality suites");
  lemmas->add_option("--seed", m.seed, "Seed");
  lemmas->add_option("--trials", m.trials, "Trials per randomized suite");
  lemmas->add_option("--out", m.output_dir, "Output directory")->required();
  lemmas->add_flag("--force-violation", m.force_violation, "Self-test: halve every constant");

  auto* oracle = app.add_subcommand("oracle-compare", "Compare an undamped run with the d'Alembert solution");
  oracle->add_option("--config", m.config_path, "Config file")->required();
  oracle->add_option("--out", m.output_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  if (*simulate) {
    return cmd_simulate(m, std::cerr);
  }
  if (*sweep) {
    std::string item;
    for (char c : values + ",") {
      if (c == ',') {
        if (!item.empty()) {
          m.values.push_back(item);
        }
        item.clear();
      } else if (c != ' ') {
        item += c;
      }
    }
    return cmd_sweep(m, std::cerr);
  }
  if (*lemmas) {
    return cmd_verify_lemmas(m, std::cerr);
  }
  return cmd_oracle_compare(m, std::cerr);
}
