#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "riemwave/boundary.hpp"
#include "riemwave/config.hpp"
#include "riemwave/damping.hpp"
#include "riemwave/diagnostics.hpp"
#include "riemwave/state.hpp"
#include "riemwave/trajectory.hpp"

namespace riemwave {

/// Exact unit-CFL transport: rho moves one cell toward x = 0, xi one cell toward
/// x = 1, and the vacated wall cells are filled from the pre-shift outgoing
/// traces through apply_boundary. Advances t by dx.
GridState transport_substep(const GridState& state, const BoundarySpec& boundary);

/// Energy (times p) carried out through the walls by one transport step:
/// dx * ((1 - |c0|^p)|rho_0|^p + (1 - |c1|^p)|xi_{n-1}|^p).
double transport_in_place(GridState& state, const BoundarySpec& boundary, double p = 2.0);

/// Inverse of transport_substep. Throws DomainError when a wall coupling is zero.
GridState transport_substep_reverse(const GridState& state, const BoundarySpec& boundary);

/// Exact local relaxation over dt with q = a/2 + b frozen at `coeff_time`:
/// rho + xi is unchanged, rho - xi is multiplied by exp(-2 q dt). Does not advance t.
GridState source_substep(const GridState& state, const DampingField& damping, double dt,
                         double coeff_time);
GridState source_substep(const GridState& state, const DampingField& damping, double dt);

/// Energy bookkeeping of one step.
struct StepTally {
  double dissipation = 0.0;        // increment of cumulative_mp
  double perturbation_work = 0.0;  // increment of perturbation_work
  double boundary_loss = 0.0;      // increment of boundary_loss
};

/// Advances a state by dt = dx with cached coefficients.
///
/// Lie: transport, then source over dt with coefficients at t.
/// Strang: source over dt/2, transport, source over dt/2, coefficients at t + dt/2.
/// Dissipation increments are sampled at the midpoint of every source substep.
class Stepper {
 public:
  explicit Stepper(const SimConfig& config);

  StepTally advance(GridState& state);
  const SimConfig& config() const noexcept { return config_; }

 private:
  struct SourceCoefficients {
    double time = -1.0;
    double h = 0.0;
    std::vector<double> a;
    std::vector<double> b;
    std::vector<double> relax;       // -expm1(-2 q h) / 2
    std::vector<double> half_relax;  // -expm1(-q h) / 2
    std::vector<double> mid_scale;   // exp(-q h)
    bool has_b = false;
    bool trivial = false;
  };

  const SourceCoefficients& coefficients(double time, double h);
  void apply_source(GridState& state, const SourceCoefficients& coeffs, StepTally& tally) const;

  SimConfig config_;
  std::optional<SourceCoefficients> cache_;
};

GridState step(const GridState& state, const SimConfig& config);

struct RunOptions {
  bool retain_trajectory = false;
};

struct RunResult {
  GridState final_state;
  DiagnosticsSeries series;
  std::optional<Trajectory> trajectory;
};

/// Steps to t_final = step_count() * dx, recording a sample at t = 0, every
/// record_every steps and at the final step. Throws BlowupError on NaN/Inf.
GridState run(const GridState& initial, const SimConfig& config, SeriesSink& sink,
              Trajectory* trajectory = nullptr);
RunResult run(const GridState& initial, const SimConfig& config, const RunOptions& options = {});

}  // namespace riemwave
