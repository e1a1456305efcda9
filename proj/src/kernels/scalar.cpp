#include "riemwave/kernels.hpp"

namespace riemwave::kernels {

namespace {

void relax_scalar(double* rho, double* xi, const double* coef, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    const double w = coef[i] * (rho[i] - xi[i]);
    rho[i] -= w;
    xi[i] += w;
  }
}

double pair_sum_scalar(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    s += a[i] + b[i];
  }
  return s;
}

double sum_sq_shifted_scalar(const double* v, double shift, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = v[i] - shift;
    s += d * d;
  }
  return s;
}

double weighted_diff_sq_scalar(const double* rho, const double* xi, const double* weight,
                               const double* scale, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = (rho[i] - xi[i]) * scale[i];
    s += weight[i] * (d * d);
  }
  return s;
}

}  // namespace

const KernelTable& scalar_table() noexcept {
  static const KernelTable table{Isa::Scalar, "scalar", relax_scalar, pair_sum_scalar,
                                 sum_sq_shifted_scalar, weighted_diff_sq_scalar};
  return table;
}

}  // namespace riemwave::kernels
