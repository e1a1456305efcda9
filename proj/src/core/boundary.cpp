#include "riemwave/boundary.hpp"

#include <cmath>

#include "riemwave/errors.hpp"

namespace riemwave {

BoundarySpec make_boundary_dynamic(double kappa) {
  if (!(kappa > 0.0) || !std::isfinite(kappa)) {
    throw DomainError("dynamic boundary: kappa must be positive and finite");
  }
  const double c = (kappa - 1.0) / (kappa + 1.0);
  return {BoundaryKind::Dynamic, kappa, c, c};
}

BoundarySpec make_boundary_dynamic(double c0, double c1) {
  if (!(std::abs(c0) < 1.0) || !(std::abs(c1) < 1.0)) {
    throw DomainError("dynamic boundary: coefficients must lie in (-1, 1)");
  }
  // kappa is only meaningful for c0 == c1; invert the Moebius map from c0.
  const double kappa = (1.0 + c0) / (1.0 - c0);
  return {BoundaryKind::Dynamic, kappa, c0, c1};
}

IncomingTraces apply_boundary(double rho_out_left, double xi_out_right,
                              const BoundarySpec& boundary) noexcept {
  return {boundary.coupling_left() * rho_out_left, boundary.coupling_right() * xi_out_right};
}

const char* to_string(BoundaryKind kind) noexcept {
  switch (kind) {
    case BoundaryKind::Dirichlet:
      return "dirichlet";
    case BoundaryKind::Neumann:
      return "neumann";
    case BoundaryKind::Dynamic:
      return "dynamic";
  }
  return "unknown";
}

}  // namespace riemwave
