#pragma once

#include <string>

#include "riemwave/boundary.hpp"
#include "riemwave/grid.hpp"
#include "riemwave/state.hpp"

namespace riemwave {

enum class InitialKind {
  Sine,          // rho0 = xi0 = offset + amplitude * sin(mode * pi * x)
  StandingWave,  // u0 = sin(pi x) (Dirichlet) or cos(pi x) (otherwise), u1 = 0
  Velocity,      // u0 = 0, u1 = amplitude * sin(pi x)
  Bump,          // smooth compactly supported bumps, rho0 != xi0
};

struct InitialData {
  InitialKind kind = InitialKind::Sine;
  double offset = 1.0;
  double amplitude = 1.0;
  int mode = 2;
};

GridState make_initial_state(const InitialData& data, const Grid& grid, const BoundarySpec& boundary);

/// C-infinity bump centred at `center` with half-width `radius`; zero outside.
double smooth_bump(double x, double center, double radius) noexcept;

InitialKind parse_initial_kind(const std::string& name);
const char* to_string(InitialKind kind) noexcept;

}  // namespace riemwave
