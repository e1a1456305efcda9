#include <algorithm>
#include <future>
#include <sstream>
#include <thread>

#include "riemwave/cli.hpp"
#include "riemwave/errors.hpp"

namespace riemwave::cli {

namespace {

struct SweepRow {
  std::string value;
  SimulationOutcome outcome;
  std::string log;
};

const char* status_name(int code) {
  switch (code) {
    case kExitOk:
      return "ok";
    case kExitConfig:
      return "config-error";
    case kExitBlowup:
      return "blowup";
    default:
      return "io-error";
  }
}

SweepRow run_one(const ConfigDocument& base, const std::string& key, const std::string& value,
                 const std::filesystem::path& out_dir) {
  SweepRow row;
  row.value = value;
  std::ostringstream log;
  try {
    ConfigDocument doc = base;
    doc.set(key, value);
    SimConfig config = config_from_document(doc);
    config.validate();
    row.outcome = simulate_to_directory(config, out_dir / (key + "=" + value), log);
  } catch (const ConfigError& e) {
    row.outcome.exit_code = kExitConfig;
    row.outcome.message = e.what();
  } catch (const DomainError& e) {
    row.outcome.exit_code = kExitConfig;
    row.outcome.message = e.what();
  } catch (const std::filesystem::filesystem_error& e) {
    row.outcome.exit_code = kExitIo;
    row.outcome.message = e.what();
  }
  row.log = log.str();
  return row;
}

}  // namespace

std::string sweep_key(const std::string& vary) {
  if (vary == "lambda") return "damping.lambda";
  if (vary == "eps0") return "damping.eps0";
  if (vary == "kappa") return "boundary.kappa";
  return vary;
}

int cmd_sweep(const RunManifest& manifest, std::ostream& err) {
  static const std::vector<std::string> allowed = {"damping.lambda", "damping.eps0", "boundary.kappa",
                                                   "p", "n_cells", "perturbation.amplitude"};
  const std::string key = sweep_key(manifest.vary);
  if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
    err << "config error: cannot sweep '" << manifest.vary
        << "'; expected lambda, eps0, kappa, p, n_cells or perturbation.amplitude\n";
    return kExitConfig;
  }
  if (manifest.values.empty()) {
    err << "config error: --values is empty\n";
    return kExitConfig;
  }
  ConfigDocument base;
  SimConfig base_config;
  try {
    base = ConfigDocument::load(manifest.config_path);
    base_config = config_from_document(base);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  const std::filesystem::path out_dir = manifest.output_dir;
  try {
    ensure_directory(out_dir);
  } catch (const std::filesystem::filesystem_error& e) {
    err << "io error: " << e.what() << '\n';
    return kExitIo;
  }

  unsigned jobs = manifest.jobs != 0 ? manifest.jobs : std::max(1u, std::thread::hardware_concurrency());
  std::vector<SweepRow> rows(manifest.values.size());
  for (std::size_t start = 0; start < rows.size(); start += jobs) {
    std::vector<std::future<SweepRow>> batch;
    const std::size_t stop = std::min(rows.size(), start + jobs);
    for (std::size_t i = start; i < stop; ++i) {
      batch.push_back(std::async(std::launch::async, run_one, std::cref(base), std::cref(key),
                                 std::cref(manifest.values[i]), std::cref(out_dir)));
    }
    for (std::size_t i = start; i < stop; ++i) {
      rows[i] = batch[i - start].get();
    }
  }

  // Dirichlet walls keep the constant c0, so only the shifted norm decays.
  const bool dirichlet = base_config.boundary.kind == BoundaryKind::Dirichlet;
  std::ostringstream summary;
  summary << "value,gamma,r_squared,final_energy,status\n";
  int exit_code = kExitOk;
  for (const auto& row : rows) {
    err << row.log;
    const auto& o = row.outcome;
    if (o.exit_code != kExitOk) {
      err << key << "=" << row.value << ": " << o.message << '\n';
      if (exit_code == kExitOk) {
        exit_code = o.exit_code;
      }
      summary << row.value << ",nan,nan,nan," << status_name(o.exit_code) << '\n';
      continue;
    }
    const DecayReport& fit = dirichlet ? o.shifted : o.raw;
    summary << row.value << ',' << format_real(fit.gamma) << ',' << format_real(fit.r_squared) << ','
            << format_real(o.final_energy) << ",ok\n";
  }
  try {
    write_file_atomic(out_dir / "summary.csv", summary.str());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "io error: " << e.what() << '\n';
    return kExitIo;
  }
  return exit_code;
}

}  // namespace riemwave::cli
