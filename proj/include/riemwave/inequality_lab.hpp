#pragma once

#include <cstddef>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "riemwave/damping.hpp"
#include "riemwave/trajectory.hpp"

namespace riemwave::lab {

// Monotonicity inequality -----------------------------------------------------

/// (alpha - beta)(alpha|alpha|^{p-2} - beta|beta|^{p-2})
double monotonicity_gap(double alpha, double beta, double p);

/// |alpha - beta|^p for p >= 2, min(|alpha - beta|^p, |alpha - beta|^2) for p < 2.
double monotonicity_lower_bound(double alpha, double beta, double p);

/// Brute-force best constant C_p = min gap / lower bound with alpha = 1 and beta
/// on a uniform grid of [-1, 1]; the removable singularity at beta = 1 is replaced
/// by its limit (p - 1 for p <= 2, +inf for p > 2). For p >= 2 the ratio is
/// homogeneous and the value holds for every pair; for p < 2 it only covers
/// pairs with max(|alpha|, |beta|) = 1.
struct BestConstant {
  double value;
  double argmin_beta;
};
BestConstant best_monotonicity_constant(double p, std::size_t grid_points = 20001);

struct LemIneqBound {
  double lhs;      // sum over space-time of a |rho - xi|^p
  double m_p;      // sum over space-time of a (rho - xi)(rho|rho|^{p-2} - xi|xi|^{p-2})
  double rhs_raw;  // m_p for p >= 2, m_p + m_p^{2/p} for p < 2
};

/// Both sides of the dissipation-controls-difference bound, by the rectangle rule
/// over the retained trajectory with a sampled at every (t_k, x_i).
LemIneqBound lem_ineq_bound(const Trajectory& run, const DampingField& damping, double p);

// Mean oscillation ------------------------------------------------------------

/// Nodal samples u(j * step), j = 0..len-1, linearly interpolated between nodes.
struct SampledPath {
  std::vector<double> values;
  double step = 0.0;

  double length() const noexcept {
    return values.empty() ? 0.0 : step * static_cast<double>(values.size() - 1);
  }
};

struct MeanOscillation {
  double lhs;       // int_0^L |u - mean_{(0,L)} u|^p
  double rhs;       // int_0^l int_0^L |u(x+s) - u(x)|^p dx ds
  double constant;  // 2^p n^{p+1} / L
  int n;
  bool holds;       // lhs <= constant * rhs
};

/// Smallest n >= 2 with 2/n <= l/L (l/L clamped to 1).
int mean_oscillation_n(double L, double l);

/// Computes both sides with cellwise Simpson in x and composite Simpson in s,
/// exact for piecewise-linear u and p = 2. L and l must be multiples of the
/// path step; throws DomainError if l >= L, l <= 0 or the path is shorter than L + l.
MeanOscillation mean_oscillation_bound(const SampledPath& u, double L, double l, double p);

// Characteristic relations ----------------------------------------------------

/// |xi(t+s, y+s) - xi(t, y) - (1/2) int_0^s a (rho - xi) along the diagonal|,
/// trapezoidal rule with step dx. Indices: start step k, start cell j, m steps.
double characteristic_difference_check(const Trajectory& run, const DampingField& damping, std::size_t k,
                                       std::size_t j, std::size_t m);
/// Same with real arguments; t and s must be multiples of dx and y a cell centre.
double characteristic_difference_check(const Trajectory& run, const DampingField& damping, double t, double s,
                                       double y);

struct WitnessPoint {
  double z;
  std::size_t cell;
  double trace_integral;  // int_0^T |rho - xi|^p (t, z) dt
  double strip_integral;  // int_{x0-eps0}^{x0+eps0} int_0^T |rho - xi|^p
  double half_strip_mean; // cell average of the time integral over (x0 - eps0/2, x0 + eps0/2)
};

/// Cell centre z in (x0 - eps0/2, x0 + eps0/2) minimising the time-integrated
/// |rho - xi|^p. Throws StateError if no centre lies in the interval.
WitnessPoint witness_point_search(const Trajectory& run, double x0, double eps0, double p);

// Reporting -------------------------------------------------------------------

struct LemmaRow {
  std::string name;
  std::size_t trials = 0;
  double worst_ratio = 0.0;
  double constant = 0.0;
  bool pass = true;
  std::string counterexample;
};

void write_lemma_table(std::ostream& out, const std::vector<LemmaRow>& rows);

// Randomness ------------------------------------------------------------------

/// Counter-based generator: the stream for (seed, trial) is independent of the
/// order in which trials run.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream = 0) noexcept;

  std::uint64_t next_u64() noexcept;
  /// Uniform in [0, 1).
  double uniform() noexcept;
  double uniform(double lo, double hi) noexcept { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [lo, hi].
  std::int64_t integer(std::int64_t lo, std::int64_t hi) noexcept;

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

/// Random piecewise-constant function on [0, length] sampled at `nodes` points.
SampledPath random_step_function(TrialRng& rng, double length, double step);
/// Random trigonometric polynomial of degree <= 6 sampled on [0, length].
SampledPath random_trig_polynomial(TrialRng& rng, double length, double step);

}  // namespace riemwave::lab
