#include <algorithm>
#include <cmath>
#include <limits>

#include "riemwave/diagnostics.hpp"
#include "riemwave/errors.hpp"

namespace riemwave {

FitWindow default_window(double t_final) noexcept {
  return FitWindow{0.4 * t_final, t_final};
}

DecayReport fit_decay(std::span<const double> times, std::span<const double> values, FitWindow window,
                      NormKind kind) {
  if (times.size() != values.size()) {
    throw FitError("fit_decay: times and values differ in length");
  }
  if (!(window.t_lo < window.t_hi)) {
    throw FitError("fit_decay: empty window");
  }
  constexpr double slack = 1e-9;
  DecayReport report;
  report.window = window;
  report.norm_kind = kind;

  std::vector<double> ts;
  std::vector<double> ys;
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (times[k] < window.t_lo - slack || times[k] > window.t_hi + slack) {
      continue;
    }
    ts.push_back(times[k]);
    ys.push_back(values[k]);
  }
  report.samples = ts.size();
  if (ts.size() < 5) {
    throw FitError("fit_decay: fewer than 5 samples in window [" + format_real(window.t_lo) + ", " +
                   format_real(window.t_hi) + "]");
  }

  for (std::size_t k = 0; k < times.size(); ++k) {
    if (times[k] <= window.t_hi + slack && !(values[k] > kDecayFloor)) {
      report.extinction_time = times[k];
      break;
    }
  }
  const bool hit_floor = std::any_of(ys.begin(), ys.end(), [](double v) { return !(v > kDecayFloor); });
  if (hit_floor) {
    report.extinct = true;
    report.gamma = std::numeric_limits<double>::infinity();
    report.prefactor = std::numeric_limits<double>::quiet_NaN();
    report.r_squared = std::numeric_limits<double>::quiet_NaN();
    return report;
  }

  const double n = static_cast<double>(ts.size());
  double t_mean = 0.0;
  double y_mean = 0.0;
  std::vector<double> logs(ys.size());
  for (std::size_t k = 0; k < ts.size(); ++k) {
    logs[k] = std::log(ys[k]);
    t_mean += ts[k];
    y_mean += logs[k];
  }
  t_mean /= n;
  y_mean /= n;
  double stt = 0.0;
  double sty = 0.0;
  double syy = 0.0;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const double dt = ts[k] - t_mean;
    const double dy = logs[k] - y_mean;
    stt += dt * dt;
    sty += dt * dy;
    syy += dy * dy;
  }
  if (!(stt > 0.0)) {
    throw FitError("fit_decay: all window samples share one time");
  }
  const double slope = sty / stt;
  const double intercept = y_mean - slope * t_mean;
  double ss_res = 0.0;
  for (std::size_t k = 0; k < ts.size(); ++k) {
    const double r = logs[k] - (intercept + slope * ts[k]);
    ss_res += r * r;
  }
  report.gamma = -slope;
  report.prefactor = std::exp(intercept);
  report.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
  if (syy == 0.0) {
    report.gamma = 0.0;
  }
  return report;
}

const char* to_string(NormKind kind) noexcept {
  return kind == NormKind::Raw ? "raw" : "shifted";
}

std::string format_decay_line(const DecayReport& r) {
  return std::string("norm=") + to_string(r.norm_kind) + " gamma=" + format_real(r.gamma) +
         " prefactor=" + format_real(r.prefactor) + " r2=" + format_real(r.r_squared) +
         " window=" + format_real(r.window.t_lo) + "," + format_real(r.window.t_hi);
}

}  // namespace riemwave
