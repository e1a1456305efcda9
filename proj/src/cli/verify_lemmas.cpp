#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "riemwave/cli.hpp"
#include "riemwave/errors.hpp"
#include "riemwave/inequality_lab.hpp"
#include "riemwave/initial.hpp"
#include "riemwave/transport.hpp"

namespace riemwave::cli {

namespace {

using lab::LemmaRow;
using lab::TrialRng;

constexpr std::size_t kPairsPerTrial = 1000;

std::string label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

LemmaRow monotonicity_sign(std::uint64_t seed, std::size_t trials) {
  LemmaRow row{"monotonicity sign", trials, -std::numeric_limits<double>::infinity(), 0.0, true, {}};
  for (std::size_t trial = 0; trial < trials; ++trial) {
    TrialRng rng(seed, trial, 1);
    for (std::size_t k = 0; k < kPairsPerTrial; ++k) {
      const double alpha = rng.uniform(-4.0, 4.0);
      const double beta = rng.uniform(-4.0, 4.0);
      const double p = rng.uniform(1.05, 5.0);
      const double scale = std::pow(std::abs(alpha) + std::abs(beta), p);
      const double ratio = scale > 0.0 ? -lab::monotonicity_gap(alpha, beta, p) / scale : 0.0;
      if (ratio > row.worst_ratio) {
        row.worst_ratio = ratio;
        row.counterexample = "trial=" + std::to_string(trial) + " alpha=" + format_real(alpha) +
                             " beta=" + format_real(beta) + " p=" + format_real(p);
      }
    }
  }
  return row;
}

LemmaRow monotonicity_constant(std::uint64_t seed, std::size_t trials, double p) {
  const lab::BestConstant best = lab::best_monotonicity_constant(p);
  LemmaRow row{"monotonicity C_p p=" + label(p), trials, 0.0, 1.0 / best.value, true, {}};
  for (std::size_t trial = 0; trial < trials; ++trial) {
    TrialRng rng(seed, trial, 2 + static_cast<std::uint64_t>(p * 16));
    for (std::size_t k = 0; k < kPairsPerTrial; ++k) {
      const double alpha = rng.uniform(-4.0, 4.0);
      const double beta = rng.uniform(-4.0, 4.0);
      if (alpha == beta) {
        continue;
      }
      const double ratio = lab::monotonicity_lower_bound(alpha, beta, p) / lab::monotonicity_gap(alpha, beta, p);
      if (ratio > row.worst_ratio) {
        row.worst_ratio = ratio;
        row.counterexample = "trial=" + std::to_string(trial) + " alpha=" + format_real(alpha) +
                             " beta=" + format_real(beta);
      }
    }
  }
  return row;
}

LemmaRow mean_oscillation(std::uint64_t seed, std::size_t trials, double p, double l, std::uint64_t stream) {
  constexpr double L = 1.0;
  constexpr double step = 0.02;
  const std::size_t smooth_trials = std::max<std::size_t>(1, trials / 10);
  LemmaRow row{"mean oscillation p=" + label(p) + " l=" + label(l), trials + smooth_trials, 0.0, 0.0,
               true, {}};
  for (std::size_t trial = 0; trial < row.trials; ++trial) {
    const bool smooth = trial >= trials;
    TrialRng rng(seed, trial, stream);
    const lab::SampledPath u = smooth ? lab::random_trig_polynomial(rng, L + l, step)
                                      : lab::random_step_function(rng, L + l, step);
    const lab::MeanOscillation m = lab::mean_oscillation_bound(u, L, l, p);
    row.constant = m.constant;
    const double ratio = m.rhs > 0.0 ? m.lhs / m.rhs : 0.0;
    if (!m.holds) {
      row.pass = false;
    }
    if (ratio > row.worst_ratio || (!m.holds && row.pass)) {
      row.worst_ratio = ratio;
      row.counterexample = "trial=" + std::to_string(trial) + " kind=" + (smooth ? "trig" : "step") +
                           " L=1 l=" + label(l) + " lhs=" + format_real(m.lhs) + " rhs=" + format_real(m.rhs);
    }
  }
  return row;
}

SimConfig lab_config(double p, const DampingField& damping) {
  SimConfig cfg;
  cfg.grid = Grid(200);
  cfg.boundary = BoundarySpec::dirichlet();
  cfg.damping = damping;
  cfg.t_final = 3.0;
  cfg.p = p;
  cfg.initial.kind = InitialKind::Bump;
  return cfg;
}

Trajectory lab_run(const SimConfig& cfg) {
  RunResult r = run(make_initial_state(cfg.initial, cfg.grid, cfg.boundary), cfg, RunOptions{true});
  return std::move(*r.trajectory);
}

std::vector<LemmaRow> solver_rows() {
  std::vector<LemmaRow> rows;
  const DampingField strip = DampingField::indicator(1.0, 0.5, 0.1);

  {
    const auto cfg = lab_config(2.0, strip);
    const auto b = lab::lem_ineq_bound(lab_run(cfg), cfg.damping, 2.0);
    const double rel = std::abs(b.lhs - b.m_p) / b.m_p;
    rows.push_back({"dissipation identity p=2", 1, rel, 1e-13, true,
                    "lhs=" + format_real(b.lhs) + " m2=" + format_real(b.m_p)});
  }
  {
    const auto cfg = lab_config(3.0, strip);
    const auto b = lab::lem_ineq_bound(lab_run(cfg), cfg.damping, 3.0);
    const double bound = 1.0 / lab::best_monotonicity_constant(3.0).value;
    rows.push_back({"dissipation bound p=3", 1, b.lhs / b.rhs_raw, bound, true,
                    "lhs=" + format_real(b.lhs) + " m3=" + format_real(b.m_p)});
  }
  {
    const auto cfg = lab_config(2.0, DampingField::zero());
    const Trajectory run = lab_run(cfg);
    double worst = 0.0;
    std::string where;
    for (std::size_t j = 0; j + 1 < run.n_cells(); j += 10) {
      const std::size_t m = run.n_cells() - 1 - j;
      const double r = lab::characteristic_difference_check(run, cfg.damping, 0, j, m);
      if (r > worst || where.empty()) {
        worst = r;
        where = "k=0 j=" + std::to_string(j) + " m=" + std::to_string(m);
      }
    }
    rows.push_back({"characteristic a=0", 1, worst, 0.0, true, where});
  }
  {
    const auto cfg = lab_config(2.0, strip);
    const auto w = lab::witness_point_search(lab_run(cfg), 0.5, 0.1, 2.0);
    rows.push_back({"witness point", 1, w.trace_integral / w.half_strip_mean, 1.0, true,
                    "z=" + format_real(w.z) + " trace=" + format_real(w.trace_integral)});
  }
  return rows;
}

}  // namespace

int cmd_verify_lemmas(const RunManifest& manifest, std::ostream& err) {
  if (manifest.trials == 0) {
    err << "config error: --trials must be positive\n";
    return kExitConfig;
  }
  std::vector<LemmaRow> rows;
  rows.push_back(monotonicity_sign(manifest.seed, manifest.trials));
  for (double p : {2.0, 3.0, 4.0}) {
    rows.push_back(monotonicity_constant(manifest.seed, manifest.trials, p));
  }
  std::uint64_t stream = 100;
  for (double p : {1.5, 2.0, 3.0}) {
    for (double l : {0.5, 0.1}) {
      rows.push_back(mean_oscillation(manifest.seed, manifest.trials, p, l, stream++));
    }
  }
  for (auto& row : solver_rows()) {
    rows.push_back(std::move(row));
  }

  bool all_pass = true;
  for (auto& row : rows) {
    if (manifest.force_violation) {
      row.constant = 0.5 * row.worst_ratio;
    }
    const double tolerance = row.constant == 0.0 ? 0.0 : 1e-12 * std::abs(row.constant);
    row.pass = row.pass && row.worst_ratio <= row.constant + tolerance;
    all_pass = all_pass && row.pass;
  }

  std::ostringstream report;
  report << "seed=" << manifest.seed << " trials=" << manifest.trials << '\n';
  lab::write_lemma_table(report, rows);
  try {
    ensure_directory(manifest.output_dir);
    write_file_atomic(std::filesystem::path(manifest.output_dir) / "lemma_report.txt", report.str());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "io error: " << e.what() << '\n';
    return kExitIo;
  }
  if (!all_pass) {
    for (const auto& row : rows) {
      if (!row.pass) {
        err << "violation: " << row.name << " worst_ratio=" << format_real(row.worst_ratio)
            << " constant=" << format_real(row.constant) << " counterexample: " << row.counterexample << '\n';
      }
    }
    return kExitLemma;
  }
  return kExitOk;
}

}  // namespace riemwave::cli
