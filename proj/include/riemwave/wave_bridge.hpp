#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "riemwave/boundary.hpp"
#include "riemwave/grid.hpp"
#include "riemwave/quadrature.hpp"
#include "riemwave/state.hpp"

namespace riemwave {

/// Displacement, velocity and strain at cell centres.
struct WaveState {
  std::vector<double> u;
  std::vector<double> ut;
  std::vector<double> ux;
  double t = 0.0;
};

/// rho0 = strain + u1, xi0 = strain - u1. Throws DomainError on length mismatch.
std::pair<std::vector<double>, std::vector<double>> riemann_from_wave(std::span<const double> u0_strain,
                                                                     std::span<const double> u1);

/// ut = (rho - xi)/2, ux = (rho + xi)/2, and u by cumulative midpoint quadrature of
/// ux from the left wall starting at `anchor` = u(t, 0). Dirichlet forces anchor 0.
WaveState wave_from_riemann(const GridState& state, const BoundarySpec& boundary, double anchor = 0.0);

/// Tracks u(t, 0) for walls that do not pin it, by trapezoidal time integration
/// of u_t at the left wall (linearly extrapolated from the first two cells).
class AnchorTracker {
 public:
  AnchorTracker(const BoundarySpec& boundary, double u_at_left_wall, const GridState& initial);

  /// Feed the next state (any positive time increment).
  void advance(const GridState& state);
  double anchor() const noexcept { return anchor_; }

 private:
  static double wall_velocity(const GridState& state);

  bool pinned_;
  double anchor_;
  double last_t_;
  double last_velocity_;
};

/// Central difference (u0(x + dx/2) - u0(x - dx/2)) / dx at cell centres; O(dx^2).
std::vector<double> finite_difference_strain(const std::function<double(double)>& u0, const Grid& grid);

// d'Alembert reference --------------------------------------------------------

using LineFunction = std::function<double(double)>;
using PlaneFunction = std::function<double(double, double)>;

/// Reflection of data given on (0, 1) to the whole line with period 2.
/// Odd extensions match u = 0 walls, even extensions match u_x = 0 walls.
LineFunction odd_extension(LineFunction f);
LineFunction even_extension(LineFunction f);
/// Extension in x of g(t, x) for every t.
PlaneFunction odd_extension(PlaneFunction g);
PlaneFunction even_extension(PlaneFunction g);

/// Data of the whole-line problem u_tt - u_xx = g, already extended.
struct DalembertData {
  LineFunction u0;
  LineFunction u1;
  /// Derivative of u0; needed only for traces.
  LineFunction u0_prime;
  /// Source term; empty means g = 0.
  PlaneFunction g;
};

/// u(t, x) = (u0(x-t) + u0(x+t))/2 + (1/2) int_{x-t}^{x+t} u1
///          + (1/2) int_0^t int_{x-t+tau}^{x+t-tau} g(tau, y) dy dtau.
double dalembert_reference(const DalembertData& data, double t, double x, const QuadratureOptions& options = {});

struct TraceDerivatives {
  double ut;
  double ux;
};

/// Time and space derivatives of dalembert_reference, with the source entering
/// through integrals along the two characteristics through (t, x).
TraceDerivatives trace_derivatives_dalembert(const DalembertData& data, double t, double x,
                                             const QuadratureOptions& options = {});

}  // namespace riemwave
