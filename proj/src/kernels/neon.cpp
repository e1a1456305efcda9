#include <arm_neon.h>

#include "variants.hpp"

namespace riemwave::kernels::detail {

namespace {

void relax_neon(double* rho, double* xi, const double* coef, std::size_t n) {
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t r = vld1q_f64(rho + i);
    const float64x2_t x = vld1q_f64(xi + i);
    const float64x2_t w = vmulq_f64(vld1q_f64(coef + i), vsubq_f64(r, x));
    vst1q_f64(rho + i, vsubq_f64(r, w));
    vst1q_f64(xi + i, vaddq_f64(x, w));
  }
  for (; i < n; ++i) {
    const double w = coef[i] * (rho[i] - xi[i]);
    rho[i] -= w;
    xi[i] += w;
  }
}

double pair_sum_neon(const double* a, const double* b, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    acc = vaddq_f64(acc, vaddq_f64(vld1q_f64(a + i), vld1q_f64(b + i)));
  }
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) {
    s += a[i] + b[i];
  }
  return s;
}

double sum_sq_shifted_neon(const double* v, double shift, std::size_t n) {
  const float64x2_t sh = vdupq_n_f64(shift);
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t d = vsubq_f64(vld1q_f64(v + i), sh);
    acc = vaddq_f64(acc, vmulq_f64(d, d));
  }
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) {
    const double d = v[i] - shift;
    s += d * d;
  }
  return s;
}

double weighted_diff_sq_neon(const double* rho, const double* xi, const double* weight,
                             const double* scale, std::size_t n) {
  float64x2_t acc = vdupq_n_f64(0.0);
  std::size_t i = 0;
  for (; i + 2 <= n; i += 2) {
    const float64x2_t d = vmulq_f64(vsubq_f64(vld1q_f64(rho + i), vld1q_f64(xi + i)), vld1q_f64(scale + i));
    acc = vaddq_f64(acc, vmulq_f64(vld1q_f64(weight + i), vmulq_f64(d, d)));
  }
  double s = vaddvq_f64(acc);
  for (; i < n; ++i) {
    const double d = (rho[i] - xi[i]) * scale[i];
    s += weight[i] * (d * d);
  }
  return s;
}

}  // namespace

const KernelTable& neon_table() noexcept {
  static const KernelTable table{Isa::Neon, "neon", relax_neon, pair_sum_neon, sum_sq_shifted_neon,
                                 weighted_diff_sq_neon};
  return table;
}

}  // namespace riemwave::kernels::detail
