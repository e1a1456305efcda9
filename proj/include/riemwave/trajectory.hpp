#pragma once

#include <cstddef>
#include <vector>

#include "riemwave/state.hpp"

namespace riemwave {

/// Full (rho, xi) history at every step; memory is n_cells * n_steps.
class Trajectory {
 public:
  void push(const GridState& state) { states_.push_back(state); }

  std::size_t steps() const noexcept { return states_.size(); }
  bool empty() const noexcept { return states_.empty(); }
  const GridState& operator[](std::size_t k) const { return states_.at(k); }
  const GridState& back() const { return states_.back(); }
  std::size_t n_cells() const noexcept { return states_.empty() ? 0 : states_.front().size(); }
  double dx() const noexcept { return states_.empty() ? 0.0 : states_.front().dx(); }

  /// Step index whose time is within 1e-9 of t; throws StateError when absent.
  std::size_t index_of_time(double t) const;

 private:
  std::vector<GridState> states_;
};

}  // namespace riemwave
