#include <algorithm>
#include <cmath>

#include "riemwave/diagnostics.hpp"
#include "riemwave/errors.hpp"
#include "riemwave/kernels.hpp"

namespace riemwave {

double signed_power(double x, double p) noexcept {
  if (x == 0.0) {
    return 0.0;
  }
  if (p == 2.0) {
    return x;
  }
  return std::copysign(std::pow(std::abs(x), p - 1.0), x);
}

double abs_power(double x, double p) noexcept {
  if (p == 2.0) {
    return x * x;
  }
  return std::pow(std::abs(x), p);
}

double monotone_integrand(double rho, double xi, double p) noexcept {
  const double d = rho - xi;
  if (p == 2.0) {
    return d * d;
  }
  // Exact value is non-negative; rounding in pow can leave a tiny negative.
  return std::max(0.0, d * (signed_power(rho, p) - signed_power(xi, p)));
}

void require_exponent(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw DomainError("exponent p must lie in (1, inf)");
  }
}

double lp_power_sum(std::span<const double> v, double shift, double p, double dx) {
  require_exponent(p);
  if (p == 2.0) {
    return kernels::sum_sq_shifted(v, shift) * dx;
  }
  double s = 0.0;
  for (double x : v) {
    s += abs_power(x - shift, p);
  }
  return s * dx;
}

double lp_norm(std::span<const double> v, double p, double dx) {
  return std::pow(lp_power_sum(v, 0.0, p, dx), 1.0 / p);
}

double mass_integral(const GridState& state) {
  return kernels::pair_sum(state.rho, state.xi) * state.dx();
}

double c0_constant(const GridState& initial) {
  return 0.5 * mass_integral(initial);
}

double pair_lp_norm(const GridState& state, double p) {
  return shifted_lp_norm(state, 0.0, p);
}

double shifted_lp_norm(const GridState& state, double c0, double p) {
  const double dx = state.dx();
  const double s = lp_power_sum(state.rho, c0, p, dx) + lp_power_sum(state.xi, c0, p, dx);
  return std::pow(s, 1.0 / p);
}

double energy_p(const GridState& state, double p) {
  const double dx = state.dx();
  return (lp_power_sum(state.rho, 0.0, p, dx) + lp_power_sum(state.xi, 0.0, p, dx)) / p;
}

double dissipation_increment(const GridState& state, std::span<const double> a, double p, double dt) {
  require_exponent(p);
  if (a.size() != state.size()) {
    throw DomainError("dissipation_increment: damping samples do not match the state");
  }
  double s = 0.0;
  for (std::size_t i = 0; i < state.size(); ++i) {
    s += a[i] * monotone_integrand(state.rho[i], state.xi[i], p);
  }
  return dt * s * state.dx();
}

double dissipation_increment(const GridState& state, const DampingField& damping, double p, double dt) {
  const auto a = sample_field(damping, Grid(state.size()), state.t);
  return dissipation_increment(state, a, p, dt);
}

DiagnosticSample measure(const GridState& state, double p, double c0) {
  DiagnosticSample s;
  s.t = state.t;
  const double dx = state.dx();
  const double raw = lp_power_sum(state.rho, 0.0, p, dx) + lp_power_sum(state.xi, 0.0, p, dx);
  s.energy_p = raw / p;
  s.raw_norm = std::pow(raw, 1.0 / p);
  s.shifted_norm = c0 == 0.0 ? s.raw_norm : shifted_lp_norm(state, c0, p);
  s.mass = mass_integral(state);
  s.rho_left = state.rho.front();
  s.xi_left = state.xi.front();
  s.rho_right = state.rho.back();
  s.xi_right = state.xi.back();
  return s;
}

}  // namespace riemwave
