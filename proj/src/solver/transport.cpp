#include "riemwave/transport.hpp"

#include <cmath>

#include "riemwave/errors.hpp"
#include "riemwave/kernels.hpp"

namespace riemwave {

namespace {

double wall_loss(double out, double c, double p) {
  return abs_power(out, p) - abs_power(c * out, p);
}

}  // namespace

double transport_in_place(GridState& state, const BoundarySpec& boundary, double p) {
  const std::size_t n = state.size();
  if (n < 2) {
    throw DomainError("transport: state needs at least two cells");
  }
  const double rho_out = state.rho.front();
  const double xi_out = state.xi.back();
  const IncomingTraces in = apply_boundary(rho_out, xi_out, boundary);
  std::copy(state.rho.begin() + 1, state.rho.end(), state.rho.begin());
  std::copy_backward(state.xi.begin(), state.xi.end() - 1, state.xi.end());
  state.rho.back() = in.rho_right;
  state.xi.front() = in.xi_left;
  const double dx = state.dx();
  state.t += dx;
  return dx * (wall_loss(rho_out, boundary.coupling_left(), p) +
               wall_loss(xi_out, boundary.coupling_right(), p));
}

GridState transport_substep(const GridState& state, const BoundarySpec& boundary) {
  GridState next = state;
  transport_in_place(next, boundary);
  return next;
}

GridState transport_substep_reverse(const GridState& state, const BoundarySpec& boundary) {
  const double c0 = boundary.coupling_left();
  const double c1 = boundary.coupling_right();
  if (c0 == 0.0 || c1 == 0.0) {
    throw DomainError("transport reverse: a wall coupling is zero, the step is not invertible");
  }
  const std::size_t n = state.size();
  GridState prev = state;
  prev.rho.front() = state.xi.front() / c0;
  std::copy(state.rho.begin(), state.rho.end() - 1, prev.rho.begin() + 1);
  prev.xi.back() = state.rho.back() / c1;
  std::copy(state.xi.begin() + 1, state.xi.end(), prev.xi.begin());
  (void)n;
  prev.t = state.t - state.dx();
  return prev;
}

GridState source_substep(const GridState& state, const DampingField& damping, double dt,
                         double coeff_time) {
  const Grid grid(state.size());
  const auto a = sample_field(damping, grid, coeff_time);
  const auto b = sample_perturbation(damping, grid, coeff_time);
  std::vector<double> coef(state.size());
  for (std::size_t i = 0; i < coef.size(); ++i) {
    const double q = 0.5 * a[i] + b[i];
    coef[i] = -0.5 * std::expm1(-2.0 * q * dt);
  }
  GridState next = state;
  kernels::relax(next.rho, next.xi, coef);
  return next;
}

GridState source_substep(const GridState& state, const DampingField& damping, double dt) {
  return source_substep(state, damping, dt, state.t);
}

Stepper::Stepper(const SimConfig& config) : config_(config) {
  require_exponent(config_.p);
}

const Stepper::SourceCoefficients& Stepper::coefficients(double time, double h) {
  const bool reuse = cache_ && cache_->h == h &&
                     (cache_->time == time || !config_.damping.time_dependent());
  if (reuse) {
    return *cache_;
  }
  SourceCoefficients c;
  c.time = time;
  c.h = h;
  c.a = sample_field(config_.damping, config_.grid, time);
  c.has_b = config_.damping.has_perturbation();
  c.b = c.has_b ? sample_perturbation(config_.damping, config_.grid, time)
                : std::vector<double>(c.a.size(), 0.0);
  const std::size_t n = c.a.size();
  c.relax.resize(n);
  c.half_relax.resize(n);
  c.mid_scale.resize(n);
  c.trivial = true;
  for (std::size_t i = 0; i < n; ++i) {
    const double q = 0.5 * c.a[i] + c.b[i];
    c.relax[i] = -0.5 * std::expm1(-2.0 * q * h);
    c.half_relax[i] = -0.5 * std::expm1(-q * h);
    c.mid_scale[i] = std::exp(-q * h);
    if (q != 0.0) {
      c.trivial = false;
    }
  }
  cache_ = std::move(c);
  return *cache_;
}

void Stepper::apply_source(GridState& state, const SourceCoefficients& c, StepTally& tally) const {
  if (c.trivial) {
    return;
  }
  const double p = config_.p;
  const double dx = state.dx();
  const std::size_t n = state.size();
  if (p == 2.0) {
    // At the midpoint rho - xi is scaled by exp(-q h); g_2 = (rho - xi)^2.
    tally.dissipation += c.h * dx * kernels::weighted_diff_sq(state.rho, state.xi, c.a, c.mid_scale);
    if (c.has_b) {
      tally.perturbation_work +=
          c.h * dx * kernels::weighted_diff_sq(state.rho, state.xi, c.b, c.mid_scale);
    }
  } else {
    double diss = 0.0;
    double work = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double w = c.half_relax[i] * (state.rho[i] - state.xi[i]);
      const double g = monotone_integrand(state.rho[i] - w, state.xi[i] + w, p);
      diss += c.a[i] * g;
      work += c.b[i] * g;
    }
    tally.dissipation += c.h * dx * diss;
    if (c.has_b) {
      tally.perturbation_work += c.h * dx * work;
    }
  }
  kernels::relax(state.rho, state.xi, c.relax);
}

StepTally Stepper::advance(GridState& state) {
  state.check_consistent(config_.grid);
  const double dt = config_.dt();
  StepTally tally;
  if (config_.splitting == Splitting::Lie) {
    const double t0 = state.t;
    tally.boundary_loss = transport_in_place(state, config_.boundary, config_.p) / config_.p;
    apply_source(state, coefficients(t0, dt), tally);
  } else {
    const auto& c = coefficients(state.t + 0.5 * dt, 0.5 * dt);
    apply_source(state, c, tally);
    tally.boundary_loss = transport_in_place(state, config_.boundary, config_.p) / config_.p;
    apply_source(state, c, tally);
  }
  return tally;
}

GridState step(const GridState& state, const SimConfig& config) {
  Stepper stepper(config);
  GridState next = state;
  stepper.advance(next);
  return next;
}

namespace {

void check_finite(const GridState& state, std::size_t step) {
  for (std::size_t i = 0; i < state.size(); ++i) {
    if (!std::isfinite(state.rho[i])) {
      throw BlowupError(step, "rho", i);
    }
    if (!std::isfinite(state.xi[i])) {
      throw BlowupError(step, "xi", i);
    }
  }
}

}  // namespace

GridState run(const GridState& initial, const SimConfig& config, SeriesSink& sink,
              Trajectory* trajectory) {
  config.validate();
  initial.check_consistent(config.grid);
  check_finite(initial, 0);

  const double c0 = c0_constant(initial);
  Stepper stepper(config);
  GridState state = initial;
  const double t0 = initial.t;
  const double dt = config.dt();
  const std::size_t steps = config.step_count();

  double cumulative = 0.0;
  double work = 0.0;
  double boundary = 0.0;
  auto record = [&] {
    DiagnosticSample s = measure(state, config.p, c0);
    s.cumulative_mp = cumulative;
    s.perturbation_work = work;
    s.boundary_loss = boundary;
    sink.append(s);
  };

  record();
  if (trajectory != nullptr) {
    trajectory->push(state);
  }
  for (std::size_t k = 1; k <= steps; ++k) {
    const StepTally tally = stepper.advance(state);
    state.t = t0 + static_cast<double>(k) * dt;
    check_finite(state, k);
    cumulative += tally.dissipation;
    work += tally.perturbation_work;
    boundary += tally.boundary_loss;
    if (trajectory != nullptr) {
      trajectory->push(state);
    }
    if (k % config.record_every == 0 || k == steps) {
      record();
    }
  }
  return state;
}

RunResult run(const GridState& initial, const SimConfig& config, const RunOptions& options) {
  RunResult result;
  result.series = DiagnosticsSeries(config.p, c0_constant(initial));
  if (options.retain_trajectory) {
    result.trajectory.emplace();
  }
  result.final_state = run(initial, config, result.series,
                           result.trajectory ? &*result.trajectory : nullptr);
  return result;
}

}  // namespace riemwave
