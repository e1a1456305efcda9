#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "riemwave/grid.hpp"

namespace riemwave {

/// Riemann pair rho = u_x + u_t, xi = u_x - u_t sampled at cell centres at time t.
struct GridState {
  std::vector<double> rho;
  std::vector<double> xi;
  double t = 0.0;

  GridState() = default;
  GridState(std::vector<double> rho_in, std::vector<double> xi_in, double time = 0.0);
  explicit GridState(const Grid& grid, double time = 0.0);

  static GridState from_functions(const Grid& grid, const std::function<double(double)>& rho0,
                                  const std::function<double(double)>& xi0, double time = 0.0);

  std::size_t size() const noexcept { return rho.size(); }
  double dx() const noexcept { return 1.0 / static_cast<double>(rho.size()); }

  /// Throws DomainError when rho/xi lengths differ from each other or from the grid.
  void check_consistent(const Grid& grid) const;
  bool all_finite() const noexcept;
};

}  // namespace riemwave
