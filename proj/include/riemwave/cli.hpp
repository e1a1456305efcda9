#pragma once

#include <cstdint>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "riemwave/config.hpp"
#include "riemwave/diagnostics.hpp"

namespace riemwave::cli {

enum class Command { Simulate, Sweep, VerifyLemmas, OracleCompare };

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitBlowup = 3;
inline constexpr int kExitLemma = 4;
inline constexpr int kExitOracle = 5;

struct RunManifest {
  Command command = Command::Simulate;
  std::string config_path;
  std::string output_dir;
  std::uint64_t seed = 42;
  std::size_t trials = 1000;
  /// verify-lemmas self-test: replace each constant by half the measured ratio.
  bool force_violation = false;
  std::string vary;
  std::vector<std::string> values;
  /// Concurrent sweep sub-runs; 0 picks the hardware concurrency.
  unsigned jobs = 0;
};

int cmd_simulate(const RunManifest& manifest, std::ostream& err);
int cmd_sweep(const RunManifest& manifest, std::ostream& err);
int cmd_verify_lemmas(const RunManifest& manifest, std::ostream& err);
int cmd_oracle_compare(const RunManifest& manifest, std::ostream& err);

// Shared plumbing ------------------------------------------------------------

/// Writes via a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& content);
void ensure_directory(const std::filesystem::path& dir);

struct SimulationOutcome {
  int exit_code = kExitOk;
  std::string message;
  DecayReport raw;
  DecayReport shifted;
  double final_energy = 0.0;
};

/// Runs one configuration and writes series.csv, final_state.csv and
/// decay_report.txt into `dir`.
SimulationOutcome simulate_to_directory(const SimConfig& config, const std::filesystem::path& dir,
                                        std::ostream& err);

/// Maps sweep shorthands (lambda, eps0, kappa) to config keys.
std::string sweep_key(const std::string& vary);

}  // namespace riemwave::cli
