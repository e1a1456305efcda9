#include "riemwave/state.hpp"

#include <algorithm>
#include <cmath>

#include "riemwave/errors.hpp"

namespace riemwave {

GridState::GridState(std::vector<double> rho_in, std::vector<double> xi_in, double time)
    : rho(std::move(rho_in)), xi(std::move(xi_in)), t(time) {
  if (rho.size() != xi.size()) {
    throw DomainError("GridState: rho and xi lengths differ");
  }
}

GridState::GridState(const Grid& grid, double time)
    : rho(grid.n_cells(), 0.0), xi(grid.n_cells(), 0.0), t(time) {}

GridState GridState::from_functions(const Grid& grid, const std::function<double(double)>& rho0,
                                    const std::function<double(double)>& xi0, double time) {
  GridState s(grid, time);
  for (std::size_t i = 0; i < grid.n_cells(); ++i) {
    const double x = grid.center(i);
    s.rho[i] = rho0(x);
    s.xi[i] = xi0(x);
  }
  return s;
}

void GridState::check_consistent(const Grid& grid) const {
  if (rho.size() != grid.n_cells() || xi.size() != grid.n_cells()) {
    throw DomainError("GridState: length does not match grid n_cells");
  }
}

bool GridState::all_finite() const noexcept {
  auto finite = [](double v) { return std::isfinite(v); };
  return std::all_of(rho.begin(), rho.end(), finite) && std::all_of(xi.begin(), xi.end(), finite);
}

}  // namespace riemwave
