#pragma once

#include <cstddef>
#include <span>
#include <vector>

/// Data-parallel inner loops of the solver and diagnostics.
///
/// Every kernel has a scalar reference implementation and, where the target
/// supports it, an AVX2 (x86-64) or NEON (aarch64) variant. The variant is
/// chosen once at runtime from CPU capabilities; the environment variable
/// RIEMWAVE_KERNELS=scalar|avx2|neon overrides the choice.
///
/// Elementwise kernels are bit-identical across variants. Reductions use a
/// different summation order and agree to rounding.
namespace riemwave::kernels {

enum class Isa { Scalar, Avx2, Neon };

struct KernelTable {
  Isa isa;
  const char* name;

  /// w = coef[i] * (rho[i] - xi[i]); rho[i] -= w; xi[i] += w.
  void (*relax)(double* rho, double* xi, const double* coef, std::size_t n);
  /// sum(a[i] + b[i])
  double (*pair_sum)(const double* a, const double* b, std::size_t n);
  /// sum((v[i] - shift)^2)
  double (*sum_sq_shifted)(const double* v, double shift, std::size_t n);
  /// sum(weight[i] * ((rho[i] - xi[i]) * scale[i])^2)
  double (*weighted_diff_sq)(const double* rho, const double* xi, const double* weight,
                             const double* scale, std::size_t n);
};

const KernelTable& scalar_table() noexcept;
/// nullptr when the variant was not compiled in or the CPU lacks it.
const KernelTable* table_for(Isa isa) noexcept;
std::vector<Isa> available_isas();
/// The table selected for this process.
const KernelTable& active() noexcept;

const char* to_string(Isa isa) noexcept;

inline void relax(std::span<double> rho, std::span<double> xi, std::span<const double> coef) {
  active().relax(rho.data(), xi.data(), coef.data(), rho.size());
}

inline double pair_sum(std::span<const double> a, std::span<const double> b) {
  return active().pair_sum(a.data(), b.data(), a.size());
}

inline double sum_sq_shifted(std::span<const double> v, double shift) {
  return active().sum_sq_shifted(v.data(), shift, v.size());
}

inline double weighted_diff_sq(std::span<const double> rho, std::span<const double> xi,
                               std::span<const double> weight, std::span<const double> scale) {
  return active().weighted_diff_sq(rho.data(), xi.data(), weight.data(), scale.data(), rho.size());
}

}  // namespace riemwave::kernels
