#include "riemwave/inequality_lab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "riemwave/diagnostics.hpp"
#include "riemwave/errors.hpp"

namespace riemwave::lab {

double monotonicity_gap(double alpha, double beta, double p) {
  require_exponent(p);
  return (alpha - beta) * (signed_power(alpha, p) - signed_power(beta, p));
}

double monotonicity_lower_bound(double alpha, double beta, double p) {
  require_exponent(p);
  const double d = std::abs(alpha - beta);
  const double dp = abs_power(d, p);
  return p >= 2.0 ? dp : std::min(dp, d * d);
}

BestConstant best_monotonicity_constant(double p, std::size_t grid_points) {
  require_exponent(p);
  if (grid_points < 2) {
    throw DomainError("best_monotonicity_constant: need at least two grid points");
  }
  BestConstant best{std::numeric_limits<double>::infinity(), 0.0};
  const double step = 2.0 / static_cast<double>(grid_points - 1);
  for (std::size_t k = 0; k < grid_points; ++k) {
    const double beta = k + 1 == grid_points ? 1.0 : -1.0 + static_cast<double>(k) * step;
    double ratio;
    if (beta == 1.0) {
      ratio = p <= 2.0 ? p - 1.0 : std::numeric_limits<double>::infinity();
    } else {
      ratio = monotonicity_gap(1.0, beta, p) / monotonicity_lower_bound(1.0, beta, p);
    }
    if (ratio < best.value) {
      best = {ratio, beta};
    }
  }
  return best;
}

LemIneqBound lem_ineq_bound(const Trajectory& run, const DampingField& damping, double p) {
  require_exponent(p);
  if (run.steps() < 2) {
    throw StateError("lem_ineq_bound: trajectory must hold at least two steps");
  }
  const Grid grid(run.n_cells());
  const double dx = grid.dx();
  double lhs = 0.0;
  double m_p = 0.0;
  for (std::size_t k = 0; k + 1 < run.steps(); ++k) {
    const GridState& s = run[k];
    const auto a = sample_field(damping, grid, s.t);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (a[i] == 0.0) {
        continue;
      }
      lhs += a[i] * abs_power(s.rho[i] - s.xi[i], p);
      m_p += a[i] * monotone_integrand(s.rho[i], s.xi[i], p);
    }
  }
  lhs *= dx * dx;
  m_p *= dx * dx;
  const double rhs = p >= 2.0 ? m_p : m_p + std::pow(m_p, 2.0 / p);
  return {lhs, m_p, rhs};
}

int mean_oscillation_n(double L, double l) {
  if (!(L > 0.0) || !(l > 0.0)) {
    throw DomainError("mean_oscillation_n: L and l must be positive");
  }
  const double r = std::min(l / L, 1.0);
  int n = std::max(2, static_cast<int>(std::ceil(2.0 / r - 1e-12)));
  while (2.0 / n > r * (1.0 + 1e-12)) {
    ++n;
  }
  return n;
}

namespace {

std::size_t whole_steps(double len, double step, const char* what) {
  const double k = std::round(len / step);
  if (std::abs(k * step - len) > 1e-9 * std::max(1.0, len)) {
    throw DomainError(std::string("mean_oscillation_bound: ") + what + " is not a multiple of the path step");
  }
  return static_cast<std::size_t>(k);
}

/// Simpson on one panel of width h for |e|^p with e linear between e0 and e1.
double simpson_panel(double e0, double e1, double p, double h) {
  return h / 6.0 * (abs_power(e0, p) + 4.0 * abs_power(0.5 * (e0 + e1), p) + abs_power(e1, p));
}

}  // namespace

MeanOscillation mean_oscillation_bound(const SampledPath& u, double L, double l, double p) {
  if (!(p >= 1.0) || !std::isfinite(p)) {
    throw DomainError("mean_oscillation_bound: p must lie in [1, inf)");
  }
  if (!(l > 0.0) || !(l < L)) {
    throw DomainError("mean_oscillation_bound: need 0 < l < L");
  }
  if (!(u.step > 0.0)) {
    throw DomainError("mean_oscillation_bound: path step must be positive");
  }
  const std::size_t N = whole_steps(L, u.step, "L");
  const std::size_t M = whole_steps(l, u.step, "l");
  if (u.values.size() < N + M + 1) {
    throw DomainError("mean_oscillation_bound: path is shorter than L + l");
  }

  // Half-step refinement of the linear interpolant so every shift lands on a node.
  const double h = 0.5 * u.step;
  std::vector<double> r(2 * (N + M) + 1);
  for (std::size_t k = 0; k < r.size(); ++k) {
    r[k] = k % 2 == 0 ? u.values[k / 2] : 0.5 * (u.values[k / 2] + u.values[k / 2 + 1]);
  }

  double integral = 0.0;
  for (std::size_t k = 0; k < N; ++k) {
    integral += 0.5 * u.step * (u.values[k] + u.values[k + 1]);
  }
  const double mean = integral / L;
  double lhs = 0.0;
  double scale = 0.0;
  for (std::size_t k = 0; k < 2 * N; ++k) {
    lhs += simpson_panel(r[k] - mean, r[k + 1] - mean, p, h);
    scale = std::max(scale, std::abs(r[k]));
  }

  auto shifted = [&](std::size_t j) {
    double s = 0.0;
    for (std::size_t k = 0; k < 2 * N; ++k) {
      s += simpson_panel(r[k + j] - r[k], r[k + 1 + j] - r[k + 1], p, h);
    }
    return s;
  };
  // Composite Simpson in s over 2M panels of width h.
  double rhs = shifted(0) + shifted(2 * M);
  for (std::size_t j = 1; j < 2 * M; ++j) {
    rhs += (j % 2 == 1 ? 4.0 : 2.0) * shifted(j);
  }
  rhs *= h / 3.0;

  MeanOscillation out;
  out.lhs = lhs;
  out.rhs = rhs;
  out.n = mean_oscillation_n(L, l);
  out.constant = std::pow(2.0, p) * std::pow(static_cast<double>(out.n), p + 1.0) / L;
  // Rounding of the mean leaves lhs of order (eps |u|)^p even for constant u.
  const double slack = L * std::pow(16.0 * std::numeric_limits<double>::epsilon() * scale, p);
  out.holds = out.lhs <= out.constant * out.rhs * (1.0 + 1e-12) + slack;
  return out;
}

double characteristic_difference_check(const Trajectory& run, const DampingField& damping, std::size_t k,
                                       std::size_t j, std::size_t m) {
  if (run.empty()) {
    throw StateError("characteristic_difference_check: trajectory is empty");
  }
  if (k + m >= run.steps()) {
    throw StateError("characteristic_difference_check: trajectory does not cover the time window");
  }
  if (j + m >= run.n_cells()) {
    throw StateError("characteristic_difference_check: diagonal leaves the domain");
  }
  if (m == 0) {
    return 0.0;
  }
  const Grid grid(run.n_cells());
  const double dx = grid.dx();
  double integral = 0.0;
  for (std::size_t tau = 0; tau <= m; ++tau) {
    const GridState& s = run[k + tau];
    const std::size_t cell = j + tau;
    const double a = damping(s.t, grid.center(cell));
    const double w = tau == 0 || tau == m ? 0.5 : 1.0;
    integral += w * a * (s.rho[cell] - s.xi[cell]);
  }
  integral *= dx;
  return std::abs(run[k + m].xi[j + m] - run[k].xi[j] - 0.5 * integral);
}

double characteristic_difference_check(const Trajectory& run, const DampingField& damping, double t, double s,
                                       double y) {
  if (run.empty()) {
    throw StateError("characteristic_difference_check: trajectory is empty");
  }
  const double dx = run.dx();
  const std::size_t k = run.index_of_time(t);
  const double m = std::round(s / dx);
  if (m < 0.0 || std::abs(m * dx - s) > 1e-9) {
    throw StateError("characteristic_difference_check: s is not a non-negative multiple of dx");
  }
  const Grid grid(run.n_cells());
  const std::size_t j = grid.cell_of(y);
  if (std::abs(grid.center(j) - y) > 1e-9) {
    throw StateError("characteristic_difference_check: y is not a cell centre");
  }
  return characteristic_difference_check(run, damping, k, j, static_cast<std::size_t>(m));
}

WitnessPoint witness_point_search(const Trajectory& run, double x0, double eps0, double p) {
  require_exponent(p);
  if (run.steps() < 2) {
    throw StateError("witness_point_search: trajectory must hold at least two steps");
  }
  const Grid grid(run.n_cells());
  const double dx = grid.dx();
  std::vector<double> trace(grid.n_cells(), 0.0);
  for (std::size_t k = 0; k + 1 < run.steps(); ++k) {
    const GridState& s = run[k];
    for (std::size_t i = 0; i < s.size(); ++i) {
      trace[i] += abs_power(s.rho[i] - s.xi[i], p);
    }
  }
  for (double& v : trace) {
    v *= dx;
  }

  WitnessPoint best{0.0, 0, std::numeric_limits<double>::infinity(), 0.0, 0.0};
  std::size_t half_count = 0;
  double half_sum = 0.0;
  for (std::size_t i = 0; i < grid.n_cells(); ++i) {
    const double x = grid.center(i);
    if (x > x0 - eps0 && x < x0 + eps0) {
      best.strip_integral += trace[i] * dx;
    }
    if (x > x0 - 0.5 * eps0 && x < x0 + 0.5 * eps0) {
      ++half_count;
      half_sum += trace[i];
      if (trace[i] < best.trace_integral) {
        best.trace_integral = trace[i];
        best.z = x;
        best.cell = i;
      }
    }
  }
  if (half_count == 0) {
    throw StateError("witness_point_search: grid too coarse, no cell centre in (x0 - eps0/2, x0 + eps0/2)");
  }
  best.half_strip_mean = half_sum / static_cast<double>(half_count);
  return best;
}

void write_lemma_table(std::ostream& out, const std::vector<LemmaRow>& rows) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-28s %8s %24s %24s %6s\n", "lemma", "trials", "worst_ratio", "constant",
                "status");
  out << buf;
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%-28s %8zu %24s %24s %6s\n", r.name.c_str(), r.trials,
                  format_real(r.worst_ratio).c_str(), format_real(r.constant).c_str(), r.pass ? "pass" : "FAIL");
    out << buf;
    if (!r.pass && !r.counterexample.empty()) {
      out << "  counterexample: " << r.counterexample << '\n';
    }
  }
}

}  // namespace riemwave::lab
