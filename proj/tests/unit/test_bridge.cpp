#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "riemwave/diagnostics.hpp"
#include "riemwave/errors.hpp"
#include "riemwave/inequality_lab.hpp"
#include "riemwave/quadrature.hpp"
#include "riemwave/transport.hpp"
#include "riemwave/wave_bridge.hpp"

namespace rw = riemwave;

namespace {

constexpr double kPi = std::numbers::pi;

// Brute-force double integral over the backward cone with a fixed midpoint grid.
double cone_integral(const rw::PlaneFunction& g, double t, double x, int n) {
  const double h = t / n;
  double total = 0.0;
  for (int k = 0; k < n; ++k) {
    const double tau = (k + 0.5) * h;
    const double half = t - tau;
    const double hy = 2.0 * half / n;
    double row = 0.0;
    for (int j = 0; j < n; ++j) {
      row += g(tau, x - half + (j + 0.5) * hy);
    }
    total += row * hy;
  }
  return 0.5 * total * h;
}

}  // namespace

TEST(Quadrature, AdaptiveMidpointMatchesAntiderivatives) {
  EXPECT_NEAR(rw::adaptive_midpoint([](double x) { return x * x * x; }, 0.0, 2.0), 4.0, 1e-10);
  EXPECT_NEAR(rw::adaptive_midpoint([](double x) { return std::cos(x); }, 0.0, kPi), 0.0, 1e-10);
  EXPECT_NEAR(rw::adaptive_midpoint([](double x) { return std::exp(x); }, 0.0, 1.0), std::exp(1.0) - 1.0, 1e-10);
  EXPECT_NEAR(rw::adaptive_midpoint([](double x) { return std::exp(x); }, 1.0, 0.0), 1.0 - std::exp(1.0), 1e-10);
  EXPECT_EQ(rw::adaptive_midpoint([](double) { return 1.0; }, 0.5, 0.5), 0.0);
}

TEST(Quadrature, SingularIntegrandExhaustsDepth) {
  EXPECT_THROW(rw::adaptive_midpoint([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0,
                                     rw::QuadratureOptions{1e-14, 18}),
               rw::AccuracyError);
}

TEST(Quadrature, CompositeMidpointHasKnownErrorOnQuadratic) {
  for (std::size_t n : {1u, 2u, 7u, 100u}) {
    const double nn = static_cast<double>(n);
    EXPECT_NEAR(rw::composite_midpoint([](double x) { return x * x; }, 0.0, 1.0, n), 1.0 / 3.0 - 1.0 / (12.0 * nn * nn),
                1e-15);
  }
}

TEST(WaveBridge, RoundTripRecoversDerivatives) {
  rw::lab::TrialRng rng(31, 0);
  std::vector<double> strain(40);
  std::vector<double> vel(40);
  for (std::size_t i = 0; i < 40; ++i) {
    strain[i] = rng.uniform(-3.0, 3.0);
    vel[i] = rng.uniform(-3.0, 3.0);
  }
  auto [rho, xi] = rw::riemann_from_wave(strain, vel);
  const auto w = rw::wave_from_riemann(rw::GridState(rho, xi), rw::BoundarySpec::neumann(), 0.0);
  for (std::size_t i = 0; i < 40; ++i) {
    EXPECT_NEAR(w.ux[i], strain[i], 4e-15);
    EXPECT_NEAR(w.ut[i], vel[i], 4e-15);
  }
  EXPECT_THROW(rw::riemann_from_wave(strain, std::vector<double>(3)), rw::DomainError);
}

TEST(WaveBridge, ReconstructionErrorIsSecondOrder) {
  for (std::size_t n : {16u, 64u, 256u}) {
    const rw::Grid grid(n);
    const auto u0 = [](double x) { return std::sin(kPi * x); };
    const auto strain = rw::finite_difference_strain(u0, grid);
    auto [rho, xi] = rw::riemann_from_wave(strain, std::vector<double>(n, 0.0));
    const auto w = rw::wave_from_riemann(rw::GridState(rho, xi), rw::BoundarySpec::dirichlet());
    const double dx = grid.dx();
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      worst = std::max(worst, std::abs(w.u[i] - u0(grid.center(i))));
    }
    EXPECT_LE(worst, kPi * kPi / 8.0 * dx * dx * 1.001) << "n=" << n;
    EXPECT_GE(worst, kPi * kPi / 8.0 * dx * dx * 0.9) << "n=" << n;
  }
}

TEST(WaveBridge, EnergyIsHalfTheQuadraticRiemannEnergy) {
  rw::lab::TrialRng rng(32, 0);
  rw::GridState s{rw::Grid(25)};
  for (std::size_t i = 0; i < 25; ++i) {
    s.rho[i] = rng.uniform(-1.0, 1.0);
    s.xi[i] = rng.uniform(-1.0, 1.0);
  }
  const auto w = rw::wave_from_riemann(s, rw::BoundarySpec::dirichlet());
  double e = 0.0;
  for (std::size_t i = 0; i < 25; ++i) {
    e += 0.5 * (w.ut[i] * w.ut[i] + w.ux[i] * w.ux[i]) * s.dx();
  }
  EXPECT_NEAR(e, 0.5 * rw::energy_p(s, 2.0), 1e-15);
}

TEST(WaveBridge, AnchorFollowsUniformMotion) {
  const std::size_t n = 20;
  const double v = 0.75;
  rw::GridState s(std::vector<double>(n, v), std::vector<double>(n, -v));
  rw::AnchorTracker tracker(rw::BoundarySpec::neumann(), 0.4, s);
  for (int k = 0; k < 30; ++k) {
    s = rw::transport_substep(s, rw::BoundarySpec::neumann());
    tracker.advance(s);
  }
  EXPECT_NEAR(tracker.anchor(), 0.4 + v * s.t, 1e-14);
  rw::AnchorTracker pinned(rw::BoundarySpec::dirichlet(), 0.4, s);
  pinned.advance(s);
  EXPECT_EQ(pinned.anchor(), 0.0);
}

TEST(Extensions, OddAndEvenAboutBothWalls) {
  const auto f = [](double x) { return x * x * (1.0 - x) + 0.3; };
  const auto odd = rw::odd_extension(rw::LineFunction(f));
  const auto even = rw::even_extension(rw::LineFunction(f));
  rw::lab::TrialRng rng(33, 0);
  for (int k = 0; k < 200; ++k) {
    const double x = rng.uniform(0.001, 0.999);
    EXPECT_DOUBLE_EQ(odd(x), f(x));
    EXPECT_DOUBLE_EQ(odd(-x), -f(x));
    EXPECT_DOUBLE_EQ(odd(2.0 - x), -f(x));
    EXPECT_NEAR(odd(x + 4.0), f(x), 1e-14);
    EXPECT_DOUBLE_EQ(even(-x), f(x));
    EXPECT_DOUBLE_EQ(even(2.0 - x), f(x));
    EXPECT_NEAR(even(x - 6.0), f(x), 1e-14);
  }
  const auto g = rw::odd_extension(rw::PlaneFunction([](double t, double x) { return t + x; }));
  EXPECT_DOUBLE_EQ(g(1.0, -0.25), -1.25);
}

TEST(Dalembert, DirichletStandingWaveClosedForm) {
  rw::DalembertData data;
  data.u0 = rw::odd_extension(rw::LineFunction([](double x) { return std::sin(kPi * x); }));
  data.u1 = [](double) { return 0.0; };
  data.u0_prime = rw::even_extension(rw::LineFunction([](double x) { return kPi * std::cos(kPi * x); }));
  for (double t : {0.0, 0.3, 1.1, 2.7}) {
    for (double x : {0.05, 0.5, 0.81}) {
      EXPECT_NEAR(rw::dalembert_reference(data, t, x), std::sin(kPi * x) * std::cos(kPi * t), 1e-13);
      const auto d = rw::trace_derivatives_dalembert(data, t, x);
      EXPECT_NEAR(d.ut, -kPi * std::sin(kPi * x) * std::sin(kPi * t), 1e-13);
      EXPECT_NEAR(d.ux, kPi * std::cos(kPi * x) * std::cos(kPi * t), 1e-13);
    }
  }
}

TEST(Dalembert, DirichletVelocityClosedForm) {
  rw::DalembertData data;
  data.u0 = [](double) { return 0.0; };
  data.u0_prime = [](double) { return 0.0; };
  data.u1 = rw::odd_extension(rw::LineFunction([](double x) { return std::sin(kPi * x); }));
  for (double t : {0.2, 0.9, 1.6}) {
    for (double x : {0.1, 0.45, 0.95}) {
      EXPECT_NEAR(rw::dalembert_reference(data, t, x), std::sin(kPi * x) * std::sin(kPi * t) / kPi, 1e-10);
      const auto d = rw::trace_derivatives_dalembert(data, t, x);
      EXPECT_NEAR(d.ut, std::sin(kPi * x) * std::cos(kPi * t), 1e-14);
      EXPECT_NEAR(d.ux, std::cos(kPi * x) * std::sin(kPi * t), 1e-14);
    }
  }
}

TEST(Dalembert, UniformForcingInsideTheCone) {
  rw::DalembertData data;
  data.u0 = [](double) { return 0.0; };
  data.u0_prime = [](double) { return 0.0; };
  data.u1 = [](double) { return 0.0; };
  data.g = rw::odd_extension(rw::PlaneFunction([](double, double) { return 1.0; }));
  EXPECT_NEAR(rw::dalembert_reference(data, 0.25, 0.5), 0.25 * 0.25 / 2.0, 1e-12);
  const auto d = rw::trace_derivatives_dalembert(data, 0.25, 0.5);
  EXPECT_NEAR(d.ut, 0.25, 1e-12);
  EXPECT_NEAR(d.ux, 0.0, 1e-12);
}

TEST(Dalembert, ForcedSolutionAgreesWithBruteForceAndDifferences) {
  rw::DalembertData data;
  data.u0 = rw::odd_extension(rw::LineFunction([](double x) { return x * (1.0 - x); }));
  data.u0_prime = rw::even_extension(rw::LineFunction([](double x) { return 1.0 - 2.0 * x; }));
  data.u1 = rw::odd_extension(rw::LineFunction([](double x) { return std::sin(2.0 * kPi * x); }));
  data.g = rw::odd_extension(rw::PlaneFunction([](double t, double x) { return std::cos(t) * x * (1.0 - x); }));
  // Stay off the characteristics through the corners x +- t in Z, where u_t has a kink.
  const double t = 0.65;
  const double x = 0.3;
  rw::DalembertData unforced = data;
  unforced.g = nullptr;
  const double forced_part = rw::dalembert_reference(data, t, x) - rw::dalembert_reference(unforced, t, x);
  EXPECT_NEAR(forced_part, cone_integral(data.g, t, x, 1500), 2e-6);

  const rw::QuadratureOptions tight{1e-13, 18};
  const double h = 1e-4;
  const auto d = rw::trace_derivatives_dalembert(data, t, x, tight);
  const double ut_fd =
      (rw::dalembert_reference(data, t + h, x, tight) - rw::dalembert_reference(data, t - h, x, tight)) / (2 * h);
  const double ux_fd =
      (rw::dalembert_reference(data, t, x + h, tight) - rw::dalembert_reference(data, t, x - h, tight)) / (2 * h);
  EXPECT_NEAR(d.ut, ut_fd, 1e-6);
  EXPECT_NEAR(d.ux, ux_fd, 1e-6);
}

TEST(Dalembert, MissingDataIsRejected) {
  rw::DalembertData data;
  EXPECT_THROW(rw::dalembert_reference(data, 0.1, 0.1), rw::DomainError);
  EXPECT_THROW(rw::trace_derivatives_dalembert(data, 0.1, 0.1), rw::DomainError);
}
