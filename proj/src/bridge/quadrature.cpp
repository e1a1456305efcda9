#include "riemwave/quadrature.hpp"

#include <cmath>

#include "riemwave/errors.hpp"

namespace riemwave {

namespace {

constexpr int kMinDepth = 1;

struct Adaptive {
  const std::function<double(double)>& f;
  double tol_density;  // tolerance per unit length
  int max_depth;

  // fm, fl, fr: f at the midpoints of [a, b] and of its left and right thirds.
  double integrate(double a, double b, double fl, double fm, double fr, int depth) const {
    const double h = (b - a) / 3.0;
    const double k = h / 3.0;
    // Midpoints of the outer ninths of each third.
    const double g[6] = {f(a + 0.5 * k),         f(a + 2.5 * k),         f(a + h + 0.5 * k),
                         f(a + h + 2.5 * k),     f(a + 2 * h + 0.5 * k), f(a + 2 * h + 2.5 * k)};
    const double coarse = (b - a) * fm;
    const double fine = h * (fl + fm + fr);
    const double finer = k * (g[0] + fl + g[1] + g[2] + fm + g[3] + g[4] + fr + g[5]);
    if (!std::isfinite(finer)) {
      throw AccuracyError("adaptive_midpoint: integrand is not finite near x=" + std::to_string(a));
    }
    // Midpoint error shrinks 9x per trisection; one Richardson step leaves O(h^4).
    const double r1 = fine + (fine - coarse) / 8.0;
    const double r2 = finer + (finer - fine) / 8.0;
    if (depth >= kMinDepth && std::abs(r2 - r1) <= tol_density * (b - a)) {
      return r2 + (r2 - r1) / 80.0;
    }
    if (depth >= max_depth) {
      throw AccuracyError("adaptive_midpoint: tolerance not reached on [" + std::to_string(a) + ", " +
                          std::to_string(b) + "] at depth " + std::to_string(depth));
    }
    return integrate(a, a + h, g[0], fl, g[1], depth + 1) + integrate(a + h, b - h, g[2], fm, g[3], depth + 1) +
           integrate(b - h, b, g[4], fr, g[5], depth + 1);
  }
};

}  // namespace

double adaptive_midpoint(const std::function<double(double)>& f, double a, double b,
                         const QuadratureOptions& options) {
  if (a == b) {
    return 0.0;
  }
  if (b < a) {
    return -adaptive_midpoint(f, b, a, options);
  }
  if (!(options.tolerance > 0.0)) {
    throw DomainError("adaptive_midpoint: tolerance must be positive");
  }
  const Adaptive rule{f, options.tolerance / (b - a), options.max_depth};
  const double h = (b - a) / 3.0;
  return rule.integrate(a, b, f(a + 0.5 * h), f(0.5 * (a + b)), f(b - 0.5 * h), 0);
}

double composite_midpoint(const std::function<double(double)>& f, double a, double b, std::size_t n) {
  if (n == 0) {
    throw DomainError("composite_midpoint: need at least one panel");
  }
  const double h = (b - a) / static_cast<double>(n);
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s += f(a + (static_cast<double>(i) + 0.5) * h);
  }
  return s * h;
}

}  // namespace riemwave
