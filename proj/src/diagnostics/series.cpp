#include <cmath>
#include <cstdio>

#include "riemwave/diagnostics.hpp"
#include "riemwave/errors.hpp"

namespace riemwave {

void DiagnosticsSeries::append(const DiagnosticSample& s) {
  if (!times.empty() && !(s.t > times.back())) {
    throw StateError("DiagnosticsSeries: sample times must be strictly increasing");
  }
  times.push_back(s.t);
  energy_p.push_back(s.energy_p);
  mass.push_back(s.mass);
  cumulative_mp.push_back(s.cumulative_mp);
  perturbation_work.push_back(s.perturbation_work);
  boundary_loss.push_back(s.boundary_loss);
  raw_norm.push_back(s.raw_norm);
  shifted_norm.push_back(s.shifted_norm);
  rho_left.push_back(s.rho_left);
  xi_left.push_back(s.xi_left);
  rho_right.push_back(s.rho_right);
  xi_right.push_back(s.xi_right);
}

DiagnosticSample DiagnosticsSeries::at(std::size_t k) const {
  if (k >= times.size()) {
    throw StateError("DiagnosticsSeries: sample index out of range");
  }
  return DiagnosticSample{times[k],          energy_p[k],   mass[k],         cumulative_mp[k],
                          perturbation_work[k], boundary_loss[k], raw_norm[k], shifted_norm[k],
                          rho_left[k],       xi_left[k],    rho_right[k],    xi_right[k]};
}

std::vector<double> energy_identity_residual(const DiagnosticsSeries& series, double initial_energy) {
  std::vector<double> out(series.size());
  for (std::size_t k = 0; k < series.size(); ++k) {
    out[k] = series.energy_p[k] + 0.5 * series.cumulative_mp[k] + series.perturbation_work[k] +
             series.boundary_loss[k] - initial_energy;
  }
  return out;
}

std::string format_real(double value) {
  if (std::isnan(value)) {
    return "nan";
  }
  if (std::isinf(value)) {
    return value > 0 ? "inf" : "-inf";
  }
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

void write_series_csv(std::ostream& out, const DiagnosticsSeries& s) {
  out << "t,energy_p,mass,cumulative_mp,rho_left,xi_left,rho_right,xi_right,"
         "perturbation_work,boundary_loss,raw_norm,shifted_norm\n";
  for (std::size_t k = 0; k < s.size(); ++k) {
    out << format_real(s.times[k]) << ',' << format_real(s.energy_p[k]) << ','
        << format_real(s.mass[k]) << ',' << format_real(s.cumulative_mp[k]) << ','
        << format_real(s.rho_left[k]) << ',' << format_real(s.xi_left[k]) << ','
        << format_real(s.rho_right[k]) << ',' << format_real(s.xi_right[k]) << ','
        << format_real(s.perturbation_work[k]) << ',' << format_real(s.boundary_loss[k]) << ','
        << format_real(s.raw_norm[k]) << ',' << format_real(s.shifted_norm[k]) << '\n';
  }
}

void write_state_csv(std::ostream& out, const GridState& state) {
  out << "x,rho,xi\n";
  const Grid grid(state.size());
  for (std::size_t i = 0; i < state.size(); ++i) {
    out << format_real(grid.center(i)) << ',' << format_real(state.rho[i]) << ','
        << format_real(state.xi[i]) << '\n';
  }
}

}  // namespace riemwave
