#include "riemwave/damping.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "riemwave/errors.hpp"

namespace riemwave {

double DampingTable::operator()(double t, double x) const {
  if (times.empty() || rows.empty()) {
    return 0.0;
  }
  std::size_t k = 0;
  auto it = std::lower_bound(times.begin(), times.end(), t);
  if (it == times.end()) {
    k = times.size() - 1;
  } else {
    k = static_cast<std::size_t>(it - times.begin());
    if (k > 0 && (t - times[k - 1]) <= (*it - t)) {
      --k;
    }
  }
  const auto& row = rows[k];
  if (row.empty()) {
    return 0.0;
  }
  const double scaled = std::floor(x * static_cast<double>(row.size()));
  std::size_t i = scaled > 0.0 ? static_cast<std::size_t>(scaled) : 0;
  i = std::min(i, row.size() - 1);
  return row[i];
}

DampingField::DampingField() : DampingField(zero()) {}

DampingField::DampingField(SpaceTimeFunction eval, bool time_dependent)
    : eval_(std::move(eval)), time_dependent_(time_dependent) {
  if (!eval_) {
    throw DomainError("DampingField: empty evaluation function");
  }
}

DampingField DampingField::zero() {
  DampingField f(SpaceTimeFunction([](double, double) { return 0.0; }), false);
  f.identically_zero_ = true;
  return f;
}

DampingField DampingField::constant(double value) {
  DampingField f([value](double, double) { return value; }, false);
  f.identically_zero_ = (value == 0.0);
  if (value > 0.0) {
    f.metadata_ = SupportMetadata{value, 0.5, 0.5, value};
  }
  return f;
}

DampingField DampingField::indicator(double lambda, double x0, double eps0) {
  if (!(lambda > 0.0) || !(eps0 > 0.0) || !(x0 > 0.0 && x0 < 1.0)) {
    throw DomainError("indicator damping: need lambda > 0, eps0 > 0, x0 in (0, 1)");
  }
  const double lo = x0 - eps0;
  const double hi = x0 + eps0;
  DampingField f([=](double, double x) { return (x > lo && x < hi) ? lambda : 0.0; }, false);
  f.metadata_ = SupportMetadata{lambda, x0, eps0, lambda};
  return f;
}

DampingField DampingField::from_table(DampingTable table) {
  if (table.times.size() != table.rows.size() || table.times.empty()) {
    throw DomainError("damping table: need one row per time and at least one row");
  }
  if (!std::is_sorted(table.times.begin(), table.times.end())) {
    throw DomainError("damping table: times must be increasing");
  }
  const bool time_dependent = table.times.size() > 1;
  return DampingField([tab = std::move(table)](double t, double x) { return tab(t, x); }, time_dependent);
}

DampingField& DampingField::with_metadata(SupportMetadata metadata) {
  if (!(metadata.lambda > 0.0) || !(metadata.eps0 > 0.0) || !(metadata.x0 > 0.0 && metadata.x0 < 1.0)) {
    throw DomainError("damping metadata: need lambda > 0, eps0 > 0, x0 in (0, 1)");
  }
  if (metadata.sup_norm && *metadata.sup_norm < 0.0) {
    throw DomainError("damping metadata: sup_norm must be non-negative");
  }
  metadata_ = metadata;
  return *this;
}

DampingField& DampingField::with_perturbation(SpaceTimeFunction b, double sup_norm_b, bool time_dependent) {
  if (!(sup_norm_b >= 0.0)) {
    throw DomainError("perturbation: sup_norm_b must be non-negative");
  }
  perturbation_ = std::move(b);
  sup_norm_b_ = sup_norm_b;
  perturbation_time_dependent_ = time_dependent;
  return *this;
}

std::vector<std::string> DampingField::validate(const Grid& grid, double t_final, double alpha) const {
  std::vector<std::string> warnings;
  constexpr int kTimeSamples = 17;
  const int n_times = time_dependent() ? kTimeSamples : 1;

  std::size_t negative = 0;
  std::size_t below_lambda = 0;
  std::size_t above_sup = 0;
  double worst_b = 0.0;
  for (int k = 0; k < n_times; ++k) {
    const double t = n_times == 1 ? 0.0 : t_final * static_cast<double>(k) / (n_times - 1);
    for (std::size_t i = 0; i < grid.n_cells(); ++i) {
      const double x = grid.center(i);
      const double a = eval_(t, x);
      if (a < 0.0) {
        ++negative;
      }
      if (metadata_) {
        if (std::abs(x - metadata_->x0) < metadata_->eps0 && a < metadata_->lambda) {
          ++below_lambda;
        }
        if (metadata_->sup_norm && std::abs(a) > *metadata_->sup_norm) {
          ++above_sup;
        }
      }
      if (perturbation_) {
        worst_b = std::max(worst_b, std::abs(perturbation_(t, x)));
      }
    }
  }

  auto note = [&warnings](std::size_t count, const char* what) {
    if (count > 0) {
      std::ostringstream os;
      os << "damping: " << what << " at " << count << " sampled points";
      warnings.push_back(os.str());
    }
  };
  note(negative, "a < 0 outside the perturbation slot");
  note(below_lambda, "a < lambda inside the declared strip");
  note(above_sup, "|a| exceeds the declared sup_norm");
  if (perturbation_ && std::max(worst_b, sup_norm_b_) > alpha) {
    std::ostringstream os;
    os << "perturbation: sup|b| = " << std::max(worst_b, sup_norm_b_) << " exceeds alpha = " << alpha;
    warnings.push_back(os.str());
  }
  return warnings;
}

std::vector<double> sample_field(const DampingField& field, const Grid& grid, double t) {
  if (!(t >= 0.0)) {
    throw DomainError("sample_field: t must be non-negative");
  }
  std::vector<double> out(grid.n_cells());
  for (std::size_t i = 0; i < grid.n_cells(); ++i) {
    const double x = grid.center(i);
    const double v = field(t, x);
    if (!std::isfinite(v)) {
      throw EvaluationError(t, x, "damping evaluation is not finite");
    }
    out[i] = v;
  }
  return out;
}

std::vector<double> sample_perturbation(const DampingField& field, const Grid& grid, double t) {
  std::vector<double> out(grid.n_cells(), 0.0);
  if (!field.has_perturbation()) {
    return out;
  }
  for (std::size_t i = 0; i < grid.n_cells(); ++i) {
    const double x = grid.center(i);
    const double v = field.perturbation(t, x);
    if (!std::isfinite(v)) {
      throw EvaluationError(t, x, "perturbation evaluation is not finite");
    }
    out[i] = v;
  }
  return out;
}

double smooth_indicator(double x, double lo, double hi, double width) noexcept {
  return 0.5 * (std::tanh((x - lo) / width) - std::tanh((x - hi) / width));
}

}  // namespace riemwave
