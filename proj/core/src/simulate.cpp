#include "oudesign/simulate.hpp"

#include <cmath>
#include <random>

#include "oudesign/covariance.hpp"
#include "oudesign/errors.hpp"

namespace oudesign {

std::vector<SamplePath> simulate(const OuParams& params, std::span<const double> times,
                                 std::uint64_t seed, std::size_t count) {
  if (count == 0) throw ArgumentError("simulate: count must be >= 1");
  if (times.empty()) throw ArgumentError("simulate: no sampling times");
  for (std::size_t k = 0; k < times.size(); ++k) {
    if (!std::isfinite(times[k])) throw ArgumentError("simulate: non-finite time");
    if (k > 0 && times[k] < times[k - 1]) throw ArgumentError("simulate: times must be sorted");
  }

  const std::size_t steps = times.size();
  std::vector<Mat2> transition(steps);
  std::vector<double> innovation_sd(steps, 0.0);
  const double variance = params.variance();
  for (std::size_t k = 1; k < steps; ++k) {
    const double d = times[k] - times[k - 1];
    transition[k] = rotation_exp(params, d);
    innovation_sd[k] = std::sqrt(-variance * std::expm1(-2.0 * params.lambda() * d));
  }

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  const Eigen::Vector2d trend(params.m1(), params.m2());
  const double sd0 = std::sqrt(variance);

  std::vector<SamplePath> paths(count);
  for (auto& path : paths) {
    path.times.assign(times.begin(), times.end());
    path.values.resize(steps);
    Eigen::Vector2d y(sd0 * normal(rng), sd0 * normal(rng));
    path.values[0] = trend + y;
    for (std::size_t k = 1; k < steps; ++k) {
      const Eigen::Vector2d eps(normal(rng), normal(rng));
      y = transition[k] * y + innovation_sd[k] * eps;
      path.values[k] = trend + y;
    }
  }
  return paths;
}

std::vector<double> regular_times(double start, double dt, std::size_t samples) {
  if (!(dt > 0.0)) throw ArgumentError("regular_times: dt must be positive");
  std::vector<double> out(samples);
  for (std::size_t k = 0; k < samples; ++k) out[k] = start + static_cast<double>(k) * dt;
  return out;
}

}  // namespace oudesign
