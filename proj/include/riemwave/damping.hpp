#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "riemwave/grid.hpp"

namespace riemwave {

using SpaceTimeFunction = std::function<double(double t, double x)>;

/// Damping strip description: a >= lambda on (x0 - eps0, x0 + eps0).
struct SupportMetadata {
  double lambda = 1.0;
  double x0 = 0.5;
  double eps0 = 0.1;
  std::optional<double> sup_norm;
};

/// Space-time table with nearest-time lookup; each row holds values on a
/// uniform cell partition of (0, 1).
struct DampingTable {
  std::vector<double> times;
  std::vector<std::vector<double>> rows;

  double operator()(double t, double x) const;
};

/// Damping coefficient a(t, x) with an optional sign-indefinite perturbation b(t, x).
///
/// Evaluation must be re-entrant: the stored callables are invoked concurrently
/// by independent simulations.
class DampingField {
 public:
  DampingField();
  DampingField(SpaceTimeFunction eval, bool time_dependent);

  static DampingField zero();
  static DampingField constant(double value);
  /// lambda on the open interval (x0 - eps0, x0 + eps0), zero elsewhere.
  static DampingField indicator(double lambda, double x0, double eps0);
  static DampingField from_table(DampingTable table);

  DampingField& with_metadata(SupportMetadata metadata);
  DampingField& with_perturbation(SpaceTimeFunction b, double sup_norm_b, bool time_dependent);

  double operator()(double t, double x) const { return eval_(t, x); }
  double perturbation(double t, double x) const { return perturbation_ ? perturbation_(t, x) : 0.0; }

  bool has_perturbation() const noexcept { return static_cast<bool>(perturbation_); }
  double perturbation_sup_norm() const noexcept { return sup_norm_b_; }
  /// True when neither a nor b depends on t; lets the solver cache coefficients.
  bool time_dependent() const noexcept { return time_dependent_ || perturbation_time_dependent_; }
  bool identically_zero() const noexcept { return identically_zero_ && !perturbation_; }
  const std::optional<SupportMetadata>& metadata() const noexcept { return metadata_; }

  /// Sampling-based checks of a >= 0, a >= lambda on the strip, |a| <= sup_norm and
  /// |b| <= alpha. Returns human-readable warnings; empty when everything holds.
  std::vector<std::string> validate(const Grid& grid, double t_final, double alpha) const;

 private:
  SpaceTimeFunction eval_;
  SpaceTimeFunction perturbation_;
  std::optional<SupportMetadata> metadata_;
  double sup_norm_b_ = 0.0;
  bool time_dependent_ = true;
  bool perturbation_time_dependent_ = false;
  bool identically_zero_ = false;
};

/// a(t, x_i) at every cell centre. Throws EvaluationError naming (t, x_i) on NaN/Inf.
std::vector<double> sample_field(const DampingField& field, const Grid& grid, double t);

/// b(t, x_i) at every cell centre (zeros when no perturbation is attached).
std::vector<double> sample_perturbation(const DampingField& field, const Grid& grid, double t);

/// Smooth indicator of (lo, hi): 0.5 * (tanh((x - lo)/width) - tanh((x - hi)/width)).
double smooth_indicator(double x, double lo, double hi, double width) noexcept;

}  // namespace riemwave
