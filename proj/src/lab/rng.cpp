#include <cmath>

#include "riemwave/inequality_lab.hpp"

namespace riemwave::lab {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t mix(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

TrialRng::TrialRng(std::uint64_t seed, std::uint64_t trial, std::uint64_t stream) noexcept
    : key_(mix(mix(mix(seed + kGolden) ^ trial) + stream * kGolden)) {}

std::uint64_t TrialRng::next_u64() noexcept {
  return mix(key_ + (++counter_) * kGolden);
}

double TrialRng::uniform() noexcept {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::int64_t TrialRng::integer(std::int64_t lo, std::int64_t hi) noexcept {
  if (hi <= lo) {
    return lo;
  }
  const auto range = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(next_u64() % range);
}

SampledPath random_step_function(TrialRng& rng, double length, double step) {
  const auto nodes = static_cast<std::size_t>(std::llround(length / step)) + 1;
  const auto pieces = static_cast<std::size_t>(rng.integer(1, 10));
  std::vector<double> breaks(pieces - 1);
  for (double& b : breaks) {
    b = rng.uniform(0.0, length);
  }
  std::vector<double> levels(pieces);
  for (double& v : levels) {
    v = rng.uniform(-1.0, 1.0);
  }
  SampledPath path;
  path.step = step;
  path.values.resize(nodes);
  for (std::size_t k = 0; k < nodes; ++k) {
    const double x = static_cast<double>(k) * step;
    std::size_t piece = 0;
    for (double b : breaks) {
      if (x >= b) {
        ++piece;
      }
    }
    path.values[k] = levels[piece];
  }
  return path;
}

SampledPath random_trig_polynomial(TrialRng& rng, double length, double step) {
  constexpr int degree = 6;
  constexpr double two_pi = 6.283185307179586476925286766559;
  double a[degree + 1];
  double b[degree + 1];
  for (int k = 0; k <= degree; ++k) {
    a[k] = rng.uniform(-1.0, 1.0) / (1.0 + k);
    b[k] = rng.uniform(-1.0, 1.0) / (1.0 + k);
  }
  const auto nodes = static_cast<std::size_t>(std::llround(length / step)) + 1;
  SampledPath path;
  path.step = step;
  path.values.resize(nodes);
  for (std::size_t j = 0; j < nodes; ++j) {
    const double x = static_cast<double>(j) * step / length;
    double v = 0.0;
    for (int k = 0; k <= degree; ++k) {
      v += a[k] * std::cos(two_pi * k * x) + b[k] * std::sin(two_pi * k * x);
    }
    path.values[j] = v;
  }
  return path;
}

}  // namespace riemwave::lab
