#include "riemwave/grid.hpp"

#include <algorithm>
#include <cmath>

#include "riemwave/errors.hpp"

namespace riemwave {

Grid::Grid(std::size_t n_cells) : n_cells_(n_cells), dx_(0.0) {
  if (n_cells < 2) {
    throw DomainError("Grid: n_cells must be at least 2");
  }
  dx_ = 1.0 / static_cast<double>(n_cells);
}

std::vector<double> Grid::centers() const {
  std::vector<double> x(n_cells_);
  for (std::size_t i = 0; i < n_cells_; ++i) {
    x[i] = center(i);
  }
  return x;
}

std::size_t Grid::cell_of(double x) const noexcept {
  const double scaled = std::floor(x * static_cast<double>(n_cells_));
  if (!(scaled > 0.0)) {
    return 0;
  }
  return std::min(static_cast<std::size_t>(scaled), n_cells_ - 1);
}

}  // namespace riemwave
