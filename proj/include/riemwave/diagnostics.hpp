#pragma once

#include <cstddef>
#include <limits>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "riemwave/damping.hpp"
#include "riemwave/state.hpp"

namespace riemwave {

/// One recorded sample of the diagnostic functionals.
struct DiagnosticSample {
  double t = 0.0;
  double energy_p = 0.0;         // (1/p) * (||rho||_p^p + ||xi||_p^p)
  double mass = 0.0;             // integral of rho + xi
  double cumulative_mp = 0.0;    // integral over [0,t] of a (rho-xi)(rho|rho|^{p-2} - xi|xi|^{p-2})
  double perturbation_work = 0.0;  // same integrand weighted by b instead of a
  double boundary_loss = 0.0;    // energy absorbed by dissipative walls
  double raw_norm = 0.0;         // ||(rho, xi)||_p
  double shifted_norm = 0.0;     // ||(rho - c0, xi - c0)||_p
  double rho_left = 0.0;
  double xi_left = 0.0;
  double rho_right = 0.0;
  double xi_right = 0.0;
};

/// Receives samples from the owning simulation thread.
class SeriesSink {
 public:
  virtual ~SeriesSink() = default;
  virtual void append(const DiagnosticSample& sample) = 0;
};

/// Column-oriented time series of diagnostics.
struct DiagnosticsSeries : SeriesSink {
  double p = 2.0;
  double c0 = 0.0;
  std::vector<double> times;
  std::vector<double> energy_p;
  std::vector<double> mass;
  std::vector<double> cumulative_mp;
  std::vector<double> perturbation_work;
  std::vector<double> boundary_loss;
  std::vector<double> raw_norm;
  std::vector<double> shifted_norm;
  std::vector<double> rho_left;
  std::vector<double> xi_left;
  std::vector<double> rho_right;
  std::vector<double> xi_right;

  DiagnosticsSeries() = default;
  DiagnosticsSeries(double p_in, double c0_in) : p(p_in), c0(c0_in) {}

  /// Throws StateError when times would stop increasing.
  void append(const DiagnosticSample& sample) override;
  std::size_t size() const noexcept { return times.size(); }
  bool empty() const noexcept { return times.empty(); }
  DiagnosticSample at(std::size_t k) const;
};

/// x |x|^{p-2}, with the value 0 at x = 0 for every p > 1.
double signed_power(double x, double p) noexcept;
/// |x|^p; exactly x*x for p == 2.
double abs_power(double x, double p) noexcept;

/// (rho - xi)(rho|rho|^{p-2} - xi|xi|^{p-2}); non-negative for every p > 1.
double monotone_integrand(double rho, double xi, double p) noexcept;

/// Throws DomainError unless 1 < p < inf.
void require_exponent(double p);

/// (sum |v_i|^p dx)^{1/p}
double lp_norm(std::span<const double> v, double p, double dx);
/// sum |v_i - shift|^p dx
double lp_power_sum(std::span<const double> v, double shift, double p, double dx);

double mass_integral(const GridState& state);
double c0_constant(const GridState& initial);
/// (||rho||_p^p + ||xi||_p^p)^{1/p}
double pair_lp_norm(const GridState& state, double p);
double shifted_lp_norm(const GridState& state, double c0, double p);
double energy_p(const GridState& state, double p);

/// dt * sum a_i (rho_i - xi_i)(rho_i|rho_i|^{p-2} - xi_i|xi_i|^{p-2}) dx, a sampled at state.t.
double dissipation_increment(const GridState& state, const DampingField& damping, double p, double dt);
double dissipation_increment(const GridState& state, std::span<const double> a, double p, double dt);

/// residual_k = E_p(t_k) + cumulative_mp(t_k)/2 + perturbation_work(t_k) + boundary_loss(t_k) - E_p(0).
/// The last two terms vanish without a perturbation and with reflecting walls.
std::vector<double> energy_identity_residual(const DiagnosticsSeries& series, double initial_energy);

DiagnosticSample measure(const GridState& state, double p, double c0);

/// CSV: t,energy_p,mass,cumulative_mp,rho_left,xi_left,rho_right,xi_right followed by
/// perturbation_work,boundary_loss,raw_norm,shifted_norm; 17 significant digits.
void write_series_csv(std::ostream& out, const DiagnosticsSeries& series);
/// CSV: x,rho,xi
void write_state_csv(std::ostream& out, const GridState& state);
std::string format_real(double value);

// Decay fitting ---------------------------------------------------------------

enum class NormKind { Raw, ShiftedByC0 };

struct FitWindow {
  double t_lo = 0.0;
  double t_hi = 0.0;
};

/// Last 60% of [0, t_final].
FitWindow default_window(double t_final) noexcept;

struct DecayReport {
  double gamma = 0.0;
  double prefactor = 0.0;
  FitWindow window;
  double r_squared = 0.0;
  NormKind norm_kind = NormKind::Raw;
  std::size_t samples = 0;
  /// Values reached the 1e-300 floor inside the window; gamma is +inf.
  bool extinct = false;
  double extinction_time = std::numeric_limits<double>::quiet_NaN();
};

inline constexpr double kDecayFloor = 1e-300;

/// Least-squares line through (t, log value) over the window; gamma = -slope.
/// Throws FitError with fewer than 5 samples in the window.
DecayReport fit_decay(std::span<const double> times, std::span<const double> values, FitWindow window,
                      NormKind kind = NormKind::Raw);

/// `norm=<raw|shifted> gamma=<g> prefactor=<C> r2=<r> window=<lo>,<hi>`
std::string format_decay_line(const DecayReport& report);
const char* to_string(NormKind kind) noexcept;

}  // namespace riemwave
