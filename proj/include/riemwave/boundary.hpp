#pragma once

namespace riemwave {

enum class BoundaryKind { Dirichlet, Neumann, Dynamic };

/// Closure rule for the incoming characteristic at each wall.
///
/// At x = 0 the incoming xi is `c_left * rho_out`, at x = 1 the incoming rho is
/// `c_right * xi_out`. Dirichlet is the identity coupling (c = 1), Neumann the
/// sign flip (c = -1), and the dynamic condition uses c0 = c1 = (kappa-1)/(kappa+1).
struct BoundarySpec {
  BoundaryKind kind = BoundaryKind::Dirichlet;
  double kappa = 0.0;
  double c0 = 1.0;
  double c1 = 1.0;

  static BoundarySpec dirichlet() noexcept { return {BoundaryKind::Dirichlet, 0.0, 1.0, 1.0}; }
  static BoundarySpec neumann() noexcept { return {BoundaryKind::Neumann, 0.0, -1.0, -1.0}; }

  double coupling_left() const noexcept { return c0; }
  double coupling_right() const noexcept { return c1; }
};

BoundarySpec make_boundary_dynamic(double kappa);

/// Dynamic-type coupling with independent wall coefficients, |c0|, |c1| < 1.
BoundarySpec make_boundary_dynamic(double c0, double c1);

struct IncomingTraces {
  double xi_left;
  double rho_right;
};

IncomingTraces apply_boundary(double rho_out_left, double xi_out_right,
                              const BoundarySpec& boundary) noexcept;

const char* to_string(BoundaryKind kind) noexcept;

}  // namespace riemwave
