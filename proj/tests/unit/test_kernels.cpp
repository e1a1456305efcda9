#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "riemwave/inequality_lab.hpp"
#include "riemwave/kernels.hpp"

namespace k = riemwave::kernels;

namespace {

std::vector<double> random_vector(riemwave::lab::TrialRng& rng, std::size_t n, double lo, double hi) {
  std::vector<double> v(n);
  for (double& x : v) {
    x = rng.uniform(lo, hi);
  }
  return v;
}

}  // namespace

TEST(Kernels, ScalarIsAlwaysAvailable) {
  const auto isas = k::available_isas();
  ASSERT_FALSE(isas.empty());
  EXPECT_EQ(isas.front(), k::Isa::Scalar);
  EXPECT_NE(k::table_for(k::Isa::Scalar), nullptr);
  EXPECT_NE(k::active().name, nullptr);
}

TEST(Kernels, RelaxMatchesClosedForm) {
  std::vector<double> rho{1.0, 2.0, 0.5};
  std::vector<double> xi{-1.0, 2.0, -0.5};
  const std::vector<double> coef{0.25, 0.9, 0.0};
  k::scalar_table().relax(rho.data(), xi.data(), coef.data(), 3);
  EXPECT_EQ(rho, (std::vector<double>{0.5, 2.0, 0.5}));
  EXPECT_EQ(xi, (std::vector<double>{-0.5, 2.0, -0.5}));
}

TEST(Kernels, ReductionsMatchNaiveLoops) {
  const std::vector<double> a{1, 2, 3, 4, 5};
  const std::vector<double> b{-1, 0, 1, 0, 2};
  const auto& s = k::scalar_table();
  EXPECT_EQ(s.pair_sum(a.data(), b.data(), 5), 17.0);
  EXPECT_EQ(s.sum_sq_shifted(a.data(), 3.0, 5), 10.0);
  const std::vector<double> w{1, 1, 0, 2, 1};
  const std::vector<double> sc{1, 1, 1, 0.5, 2};
  // (2)^2 + (2)^2 + 0 + 2*(2)^2 + (3*2)^2
  EXPECT_EQ(s.weighted_diff_sq(a.data(), b.data(), w.data(), sc.data(), 5), 4.0 + 4.0 + 8.0 + 36.0);
}

// Every compiled variant against the scalar reference: elementwise results are
// bit-identical, reductions agree to rounding.
TEST(Kernels, VariantsAgreeWithScalar) {
  const auto& ref = k::scalar_table();
  riemwave::lab::TrialRng rng(2024, 0);
  for (k::Isa isa : k::available_isas()) {
    const k::KernelTable* t = k::table_for(isa);
    ASSERT_NE(t, nullptr);
    for (std::size_t n = 0; n <= 67; ++n) {
      auto rho = random_vector(rng, n, -5.0, 5.0);
      auto xi = random_vector(rng, n, -5.0, 5.0);
      const auto coef = random_vector(rng, n, 0.0, 0.5);
      const auto w = random_vector(rng, n, 0.0, 2.0);
      const auto sc = random_vector(rng, n, 0.5, 1.0);

      auto rho_ref = rho;
      auto xi_ref = xi;
      ref.relax(rho_ref.data(), xi_ref.data(), coef.data(), n);
      t->relax(rho.data(), xi.data(), coef.data(), n);
      EXPECT_EQ(rho, rho_ref) << k::to_string(isa) << " n=" << n;
      EXPECT_EQ(xi, xi_ref) << k::to_string(isa) << " n=" << n;

      const double tol = 1e-13 * (1.0 + static_cast<double>(n));
      const double ps = ref.pair_sum(rho.data(), xi.data(), n);
      EXPECT_NEAR(t->pair_sum(rho.data(), xi.data(), n), ps, tol * 5.0);
      const double ss = ref.sum_sq_shifted(rho.data(), 0.3, n);
      EXPECT_NEAR(t->sum_sq_shifted(rho.data(), 0.3, n), ss, tol * (1.0 + ss));
      const double wd = ref.weighted_diff_sq(rho.data(), xi.data(), w.data(), sc.data(), n);
      EXPECT_NEAR(t->weighted_diff_sq(rho.data(), xi.data(), w.data(), sc.data(), n), wd, tol * (1.0 + wd));
    }
  }
}
