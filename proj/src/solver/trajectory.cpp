#include "riemwave/trajectory.hpp"

#include <cmath>
#include <string>

#include "riemwave/errors.hpp"

namespace riemwave {

std::size_t Trajectory::index_of_time(double t) const {
  if (states_.empty()) {
    throw StateError("trajectory is empty");
  }
  const double t0 = states_.front().t;
  const double dt = states_.front().dx();
  const double k = std::round((t - t0) / dt);
  if (k >= 0.0 && k < static_cast<double>(states_.size())) {
    const auto idx = static_cast<std::size_t>(k);
    if (std::abs(states_[idx].t - t) <= 1e-9) {
      return idx;
    }
  }
  throw StateError("trajectory has no step at t=" + std::to_string(t));
}

}  // namespace riemwave
