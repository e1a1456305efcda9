#include "riemwave/wave_bridge.hpp"

#include <algorithm>
#include <cmath>

#include "riemwave/errors.hpp"

namespace riemwave {

std::pair<std::vector<double>, std::vector<double>> riemann_from_wave(std::span<const double> u0_strain,
                                                                     std::span<const double> u1) {
  if (u0_strain.size() != u1.size()) {
    throw DomainError("riemann_from_wave: strain and velocity lengths differ");
  }
  std::vector<double> rho(u1.size());
  std::vector<double> xi(u1.size());
  for (std::size_t i = 0; i < u1.size(); ++i) {
    rho[i] = u0_strain[i] + u1[i];
    xi[i] = u0_strain[i] - u1[i];
  }
  return {std::move(rho), std::move(xi)};
}

WaveState wave_from_riemann(const GridState& state, const BoundarySpec& boundary, double anchor) {
  const std::size_t n = state.size();
  const double dx = state.dx();
  WaveState w;
  w.t = state.t;
  w.u.resize(n);
  w.ut.resize(n);
  w.ux.resize(n);
  double u_edge = boundary.kind == BoundaryKind::Dirichlet ? 0.0 : anchor;
  for (std::size_t i = 0; i < n; ++i) {
    w.ut[i] = 0.5 * (state.rho[i] - state.xi[i]);
    w.ux[i] = 0.5 * (state.rho[i] + state.xi[i]);
    w.u[i] = u_edge + 0.5 * dx * w.ux[i];
    u_edge += dx * w.ux[i];
  }
  return w;
}

AnchorTracker::AnchorTracker(const BoundarySpec& boundary, double u_at_left_wall, const GridState& initial)
    : pinned_(boundary.kind == BoundaryKind::Dirichlet),
      anchor_(pinned_ ? 0.0 : u_at_left_wall),
      last_t_(initial.t),
      last_velocity_(wall_velocity(initial)) {}

double AnchorTracker::wall_velocity(const GridState& state) {
  const double v0 = 0.5 * (state.rho[0] - state.xi[0]);
  const double v1 = 0.5 * (state.rho[1] - state.xi[1]);
  return 1.5 * v0 - 0.5 * v1;
}

void AnchorTracker::advance(const GridState& state) {
  const double v = wall_velocity(state);
  if (!pinned_) {
    anchor_ += 0.5 * (state.t - last_t_) * (v + last_velocity_);
  }
  last_t_ = state.t;
  last_velocity_ = v;
}

std::vector<double> finite_difference_strain(const std::function<double(double)>& u0, const Grid& grid) {
  const double dx = grid.dx();
  std::vector<double> out(grid.n_cells());
  for (std::size_t i = 0; i < out.size(); ++i) {
    const double x = grid.center(i);
    out[i] = (u0(x + 0.5 * dx) - u0(x - 0.5 * dx)) / dx;
  }
  return out;
}

namespace {

/// Maps x to [0, 2) and reports whether it landed in the reflected half (1, 2).
double fold(double x, bool& reflected) {
  double y = std::fmod(x, 2.0);
  if (y < 0.0) {
    y += 2.0;
  }
  reflected = y > 1.0;
  return reflected ? 2.0 - y : y;
}

/// Extended data may have kinks at the reflection points x in Z; integrate
/// piecewise between them.
double integrate_between_reflections(const std::function<double(double)>& f, double a, double b,
                                     const QuadratureOptions& options) {
  if (a == b) {
    return 0.0;
  }
  if (b < a) {
    return -integrate_between_reflections(f, b, a, options);
  }
  QuadratureOptions piece = options;
  const double pieces = std::max(1.0, std::ceil(b) - std::floor(a));
  piece.tolerance = options.tolerance / pieces;
  double total = 0.0;
  double lo = a;
  while (lo < b) {
    const double hi = std::min(b, std::floor(lo) + 1.0);
    total += adaptive_midpoint(f, lo, hi, piece);
    lo = hi;
  }
  return total;
}

}  // namespace

LineFunction odd_extension(LineFunction f) {
  return [f = std::move(f)](double x) {
    bool reflected = false;
    const double y = fold(x, reflected);
    return reflected ? -f(y) : f(y);
  };
}

LineFunction even_extension(LineFunction f) {
  return [f = std::move(f)](double x) {
    bool reflected = false;
    return f(fold(x, reflected));
  };
}

PlaneFunction odd_extension(PlaneFunction g) {
  return [g = std::move(g)](double t, double x) {
    bool reflected = false;
    const double y = fold(x, reflected);
    return reflected ? -g(t, y) : g(t, y);
  };
}

PlaneFunction even_extension(PlaneFunction g) {
  return [g = std::move(g)](double t, double x) {
    bool reflected = false;
    return g(t, fold(x, reflected));
  };
}

double dalembert_reference(const DalembertData& data, double t, double x, const QuadratureOptions& options) {
  if (!data.u0 || !data.u1) {
    throw DomainError("dalembert_reference: u0 and u1 are required");
  }
  double u = 0.5 * (data.u0(x - t) + data.u0(x + t));
  if (t == 0.0) {
    return u;
  }
  u += 0.5 * integrate_between_reflections(data.u1, x - t, x + t, options);
  if (data.g) {
    QuadratureOptions inner = options;
    inner.tolerance = options.tolerance / (4.0 * t);
    auto row = [&](double tau) {
      const double half = t - tau;
      if (half <= 0.0) {
        return 0.0;
      }
      return integrate_between_reflections([&](double y) { return data.g(tau, y); }, x - half, x + half, inner);
    };
    // The inner interval [x - (t - tau), x + (t - tau)] crosses a reflection
    // point whenever t - tau = |x - k|; row(tau) may have a kink there.
    std::vector<double> cuts = {0.0, t};
    for (double k = std::floor(x - t); k <= std::ceil(x + t); k += 1.0) {
      const double tau = t - std::abs(x - k);
      if (tau > 0.0 && tau < t) {
        cuts.push_back(tau);
      }
    }
    std::sort(cuts.begin(), cuts.end());
    QuadratureOptions piece = options;
    piece.tolerance = options.tolerance / static_cast<double>(cuts.size() - 1);
    double source = 0.0;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
      if (cuts[i + 1] > cuts[i]) {
        source += adaptive_midpoint(row, cuts[i], cuts[i + 1], piece);
      }
    }
    u += 0.5 * source;
  }
  return u;
}

TraceDerivatives trace_derivatives_dalembert(const DalembertData& data, double t, double x,
                                             const QuadratureOptions& options) {
  if (!data.u0_prime || !data.u1) {
    throw DomainError("trace_derivatives_dalembert: u0_prime and u1 are required");
  }
  const double dl = data.u0_prime(x - t);
  const double dr = data.u0_prime(x + t);
  const double vl = data.u1(x - t);
  const double vr = data.u1(x + t);
  TraceDerivatives out{0.5 * (dr - dl) + 0.5 * (vr + vl), 0.5 * (dl + dr) + 0.5 * (vr - vl)};
  if (data.g && t > 0.0) {
    // Along the characteristic that reaches (t, x) from the left and from the right.
    // Substituting y = x -+ (t - tau) puts the reflection points at integer y.
    const double from_left = integrate_between_reflections(
        [&](double y) { return data.g(t - (x - y), y); }, x - t, x, options);
    const double from_right = integrate_between_reflections(
        [&](double y) { return data.g(t - (y - x), y); }, x, x + t, options);
    out.ut += 0.5 * (from_right + from_left);
    out.ux += 0.5 * (from_right - from_left);
  }
  return out;
}

}  // namespace riemwave
