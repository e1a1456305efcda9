#include <immintrin.h>

#include "variants.hpp"

namespace riemwave::kernels::detail {

namespace {

// No FMA: products and sums are rounded separately, as in the scalar loop.

double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d s = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

void relax_avx2(double* rho, double* xi, const double* coef, std::size_t n) {
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d r = _mm256_loadu_pd(rho + i);
    const __m256d x = _mm256_loadu_pd(xi + i);
    const __m256d w = _mm256_mul_pd(_mm256_loadu_pd(coef + i), _mm256_sub_pd(r, x));
    _mm256_storeu_pd(rho + i, _mm256_sub_pd(r, w));
    _mm256_storeu_pd(xi + i, _mm256_add_pd(x, w));
  }
  for (; i < n; ++i) {
    const double w = coef[i] * (rho[i] - xi[i]);
    rho[i] -= w;
    xi[i] += w;
  }
}

double pair_sum_avx2(const double* a, const double* b, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    acc = _mm256_add_pd(acc, _mm256_add_pd(_mm256_loadu_pd(a + i), _mm256_loadu_pd(b + i)));
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    s += a[i] + b[i];
  }
  return s;
}

double sum_sq_shifted_avx2(const double* v, double shift, std::size_t n) {
  const __m256d sh = _mm256_set1_pd(shift);
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(v + i), sh);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    const double d = v[i] - shift;
    s += d * d;
  }
  return s;
}

double weighted_diff_sq_avx2(const double* rho, const double* xi, const double* weight,
                             const double* scale, std::size_t n) {
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= n; i += 4) {
    const __m256d d = _mm256_mul_pd(_mm256_sub_pd(_mm256_loadu_pd(rho + i), _mm256_loadu_pd(xi + i)),
                                    _mm256_loadu_pd(scale + i));
    acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_loadu_pd(weight + i), _mm256_mul_pd(d, d)));
  }
  double s = hsum(acc);
  for (; i < n; ++i) {
    const double d = (rho[i] - xi[i]) * scale[i];
    s += weight[i] * (d * d);
  }
  return s;
}

}  // namespace

const KernelTable& avx2_table() noexcept {
  static const KernelTable table{Isa::Avx2, "avx2", relax_avx2, pair_sum_avx2, sum_sq_shifted_avx2,
                                 weighted_diff_sq_avx2};
  return table;
}

}  // namespace riemwave::kernels::detail
