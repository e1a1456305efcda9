#include "riemwave/initial.hpp"

#include <cmath>
#include <numbers>

#include "riemwave/errors.hpp"

namespace riemwave {

double smooth_bump(double x, double center, double radius) noexcept {
  const double r = (x - center) / radius;
  if (std::abs(r) >= 1.0) {
    return 0.0;
  }
  return std::exp(1.0 - 1.0 / (1.0 - r * r));
}

GridState make_initial_state(const InitialData& data, const Grid& grid, const BoundarySpec& boundary) {
  using std::numbers::pi;
  const double amp = data.amplitude;
  const double off = data.offset;
  switch (data.kind) {
    case InitialKind::Sine: {
      const double k = data.mode * pi;
      auto f = [=](double x) { return off + amp * std::sin(k * x); };
      return GridState::from_functions(grid, f, f);
    }
    case InitialKind::StandingWave: {
      // Zero velocity: rho = xi = u0'.
      if (boundary.kind == BoundaryKind::Dirichlet) {
        auto strain = [=](double x) { return amp * pi * std::cos(pi * x); };
        return GridState::from_functions(grid, strain, strain);
      }
      auto strain = [=](double x) { return -amp * pi * std::sin(pi * x); };
      return GridState::from_functions(grid, strain, strain);
    }
    case InitialKind::Velocity: {
      return GridState::from_functions(
          grid, [=](double x) { return amp * std::sin(pi * x); },
          [=](double x) { return -amp * std::sin(pi * x); });
    }
    case InitialKind::Bump: {
      return GridState::from_functions(
          grid, [=](double x) { return off + amp * smooth_bump(x, 0.5, 0.2); },
          [=](double x) { return off - 0.5 * amp * smooth_bump(x, 0.45, 0.15); });
    }
  }
  throw DomainError("unknown initial data kind");
}

InitialKind parse_initial_kind(const std::string& name) {
  if (name == "sine") return InitialKind::Sine;
  if (name == "standing-wave") return InitialKind::StandingWave;
  if (name == "velocity") return InitialKind::Velocity;
  if (name == "bump") return InitialKind::Bump;
  throw DomainError("unknown initial kind '" + name + "'");
}

const char* to_string(InitialKind kind) noexcept {
  switch (kind) {
    case InitialKind::Sine:
      return "sine";
    case InitialKind::StandingWave:
      return "standing-wave";
    case InitialKind::Velocity:
      return "velocity";
    case InitialKind::Bump:
      return "bump";
  }
  return "unknown";
}

}  // namespace riemwave
