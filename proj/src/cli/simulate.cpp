#include <sstream>

#include "riemwave/cli.hpp"
#include "riemwave/errors.hpp"
#include "riemwave/initial.hpp"
#include "riemwave/transport.hpp"

namespace riemwave::cli {

SimulationOutcome simulate_to_directory(const SimConfig& config, const std::filesystem::path& dir,
                                        std::ostream& err) {
  SimulationOutcome outcome;
  for (const auto& warning : config.damping.validate(config.grid, config.t_final, config.alpha)) {
    err << "warning: " << warning << '\n';
  }
  const GridState initial = make_initial_state(config.initial, config.grid, config.boundary);
  RunResult result;
  try {
    result = run(initial, config);
  } catch (const BlowupError& e) {
    outcome.exit_code = kExitBlowup;
    outcome.message = e.what();
    return outcome;
  } catch (const EvaluationError& e) {
    outcome.exit_code = kExitBlowup;
    outcome.message = e.what();
    return outcome;
  }
  const DiagnosticsSeries& s = result.series;
  outcome.final_energy = s.energy_p.back();

  ensure_directory(dir);
  std::ostringstream series_csv;
  write_series_csv(series_csv, s);
  write_file_atomic(dir / "series.csv", series_csv.str());
  std::ostringstream state_csv;
  write_state_csv(state_csv, result.final_state);
  write_file_atomic(dir / "final_state.csv", state_csv.str());

  const FitWindow window = default_window(s.times.back());
  try {
    outcome.raw = fit_decay(s.times, s.raw_norm, window, NormKind::Raw);
    outcome.shifted = fit_decay(s.times, s.shifted_norm, window, NormKind::ShiftedByC0);
  } catch (const FitError& e) {
    outcome.exit_code = kExitConfig;
    outcome.message = std::string("decay fit: ") + e.what() + " (increase t_final or lower record_every)";
    return outcome;
  }
  std::ostringstream report;
  report << format_decay_line(outcome.raw) << '\n' << format_decay_line(outcome.shifted) << '\n';
  write_file_atomic(dir / "decay_report.txt", report.str());
  return outcome;
}

int cmd_simulate(const RunManifest& manifest, std::ostream& err) {
  SimConfig config;
  try {
    config = load_config(manifest.config_path);
    config.validate();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  try {
    const SimulationOutcome outcome = simulate_to_directory(config, manifest.output_dir, err);
    if (outcome.exit_code != kExitOk) {
      err << (outcome.exit_code == kExitBlowup ? "blow-up: " : "error: ") << outcome.message << '\n';
    }
    return outcome.exit_code;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "io error: " << e.what() << '\n';
    return kExitIo;
  }
}

}  // namespace riemwave::cli
