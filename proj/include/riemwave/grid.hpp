#pragma once

#include <cstddef>
#include <vector>

namespace riemwave {

/// Uniform cell-centred grid on (0, 1).
class Grid {
 public:
  explicit Grid(std::size_t n_cells);

  std::size_t n_cells() const noexcept { return n_cells_; }
  double dx() const noexcept { return dx_; }
  double center(std::size_t i) const noexcept { return (static_cast<double>(i) + 0.5) * dx_; }
  std::vector<double> centers() const;

  /// Index of the cell containing x, clamped to [0, n_cells).
  std::size_t cell_of(double x) const noexcept;

  friend bool operator==(const Grid& a, const Grid& b) noexcept { return a.n_cells_ == b.n_cells_; }

 private:
  std::size_t n_cells_;
  double dx_;
};

}  // namespace riemwave
