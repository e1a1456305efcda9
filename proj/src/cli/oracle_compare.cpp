#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "riemwave/cli.hpp"
#include "riemwave/errors.hpp"
#include "riemwave/initial.hpp"
#include "riemwave/transport.hpp"
#include "riemwave/wave_bridge.hpp"

namespace riemwave::cli {

namespace {

constexpr double kDisplacementTolerance = 5e-4;
constexpr double kInitialTraceTolerance = 1e-14;
constexpr double kTraceTolerance = 1e-12;
constexpr double kCheckSpacing = 0.25;

struct OracleCase {
  DalembertData data;
  double u_left_wall = 0.0;
};

OracleCase build_case(const SimConfig& cfg) {
  using std::numbers::pi;
  const double amp = cfg.initial.amplitude;
  const bool dirichlet = cfg.boundary.kind == BoundaryKind::Dirichlet;
  auto odd_or_even = [dirichlet](LineFunction f, bool odd_on_dirichlet) {
    return dirichlet == odd_on_dirichlet ? odd_extension(std::move(f)) : even_extension(std::move(f));
  };
  OracleCase c;
  LineFunction zero = [](double) { return 0.0; };
  if (cfg.initial.kind == InitialKind::StandingWave) {
    if (dirichlet) {
      c.data.u0 = odd_extension([amp](double x) { return amp * std::sin(pi * x); });
      c.data.u0_prime = even_extension([amp](double x) { return amp * pi * std::cos(pi * x); });
    } else {
      c.data.u0 = even_extension([amp](double x) { return amp * std::cos(pi * x); });
      c.data.u0_prime = odd_extension([amp](double x) { return -amp * pi * std::sin(pi * x); });
      c.u_left_wall = amp;
    }
    c.data.u1 = zero;
  } else {
    c.data.u0 = zero;
    c.data.u0_prime = zero;
    c.data.u1 = odd_or_even([amp](double x) { return amp * std::sin(pi * x); }, true);
  }
  return c;
}

struct CheckRow {
  double t = 0.0;
  double u_error = 0.0;
  double ut_error = 0.0;
  double ux_error = 0.0;
  double worst_x = 0.0;
};

CheckRow compare(const OracleCase& oc, const GridState& state, const BoundarySpec& boundary, double anchor) {
  const WaveState w = wave_from_riemann(state, boundary, anchor);
  const Grid grid(state.size());
  CheckRow row;
  row.t = state.t;
  for (std::size_t i = 0; i < state.size(); ++i) {
    const double x = grid.center(i);
    const double u = dalembert_reference(oc.data, state.t, x);
    const TraceDerivatives tr = trace_derivatives_dalembert(oc.data, state.t, x);
    const double eu = std::abs(w.u[i] - u);
    if (eu > row.u_error) {
      row.u_error = eu;
      row.worst_x = x;
    }
    row.ut_error = std::max(row.ut_error, std::abs(w.ut[i] - tr.ut));
    row.ux_error = std::max(row.ux_error, std::abs(w.ux[i] - tr.ux));
  }
  return row;
}

}  // namespace

int cmd_oracle_compare(const RunManifest& manifest, std::ostream& err) {
  SimConfig cfg;
  try {
    cfg = load_config(manifest.config_path);
    cfg.validate();
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const DomainError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  if (!cfg.damping.identically_zero()) {
    err << "config error: oracle-compare needs damping.preset = zero and no perturbation\n";
    return kExitConfig;
  }
  if (cfg.boundary.kind == BoundaryKind::Dynamic) {
    err << "config error: oracle-compare supports dirichlet and neumann walls only\n";
    return kExitConfig;
  }
  if (cfg.initial.kind != InitialKind::StandingWave && cfg.initial.kind != InitialKind::Velocity) {
    err << "config error: oracle-compare supports initial.kind = standing-wave or velocity\n";
    return kExitConfig;
  }

  const OracleCase oc = build_case(cfg);
  GridState state = make_initial_state(cfg.initial, cfg.grid, cfg.boundary);
  AnchorTracker anchor(cfg.boundary, oc.u_left_wall, state);
  Stepper stepper(cfg);
  const std::size_t steps = cfg.step_count();
  const double dt = cfg.dt();
  const auto every = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(kCheckSpacing / dt)));
  const double trace_scale = std::max(1.0, std::abs(cfg.initial.amplitude));

  std::vector<CheckRow> rows;
  bool ok = true;
  std::string failure;
  try {
    for (std::size_t k = 0; k <= steps; ++k) {
      if (k > 0) {
        stepper.advance(state);
        state.t = static_cast<double>(k) * dt;
        anchor.advance(state);
      }
      if (k % every != 0 && k != steps) {
        continue;
      }
      rows.push_back(compare(oc, state, cfg.boundary, anchor.anchor()));
      const CheckRow& r = rows.back();
      const double trace_tol = (k == 0 ? kInitialTraceTolerance : kTraceTolerance) * trace_scale;
      const bool row_ok = r.u_error <= kDisplacementTolerance && r.ut_error <= trace_tol && r.ux_error <= trace_tol;
      if (!row_ok && ok) {
        ok = false;
        failure = "t=" + format_real(r.t) + " x=" + format_real(r.worst_x) + " u_error=" + format_real(r.u_error) +
                  " ut_error=" + format_real(r.ut_error) + " ux_error=" + format_real(r.ux_error);
      }
    }
  } catch (const AccuracyError& e) {
    err << "oracle error: " << e.what() << '\n';
    return kExitOracle;
  }

  std::ostringstream csv;
  csv << "t,u_error,ut_error,ux_error,worst_x\n";
  for (const auto& r : rows) {
    csv << format_real(r.t) << ',' << format_real(r.u_error) << ',' << format_real(r.ut_error) << ','
        << format_real(r.ux_error) << ',' << format_real(r.worst_x) << '\n';
  }
  try {
    ensure_directory(manifest.output_dir);
    write_file_atomic(std::filesystem::path(manifest.output_dir) / "oracle_errors.csv", csv.str());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "io error: " << e.what() << '\n';
    return kExitIo;
  }
  if (!ok) {
    err << "oracle tolerance exceeded at " << failure << '\n';
    return kExitOracle;
  }
  return kExitOk;
}

}  // namespace riemwave::cli
