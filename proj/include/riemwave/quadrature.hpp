#pragma once

#include <cstddef>
#include <functional>

namespace riemwave {

struct QuadratureOptions {
  double tolerance = 1e-10;
  int max_depth = 18;
};

/// Adaptive midpoint rule with trisection. Each panel is sampled at 1, 3 and 9
/// midpoints; the two Richardson-extrapolated sums must agree to the panel's
/// share of the tolerance, otherwise the panel is trisected. Throws
/// AccuracyError past max_depth.
double adaptive_midpoint(const std::function<double(double)>& f, double a, double b,
                         const QuadratureOptions& options = {});

/// Fixed composite midpoint rule with n panels.
double composite_midpoint(const std::function<double(double)>& f, double a, double b, std::size_t n);

}  // namespace riemwave
