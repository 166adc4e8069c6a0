#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "oudesign/params.hpp"

namespace oudesign {

struct SamplePath {
  std::vector<double> times;
  std::vector<Eigen::Vector2d> values;  // (Z1, Z2) at each time
};

// Exact sampler for Z(t) = m + Y(t) at the given times: a stationary start
// N(0, v I) followed by the transition Y(t + d) = e^{A d} Y(t) + eps,
// eps ~ N(0, v (1 - e^{-2 lambda d}) I), with v = params.variance().
// Deterministic for a given seed. Throws ArgumentError for unsorted times
// or count == 0.
std::vector<SamplePath> simulate(const OuParams& params, std::span<const double> times,
                                 std::uint64_t seed, std::size_t count);

// Regular grid t_k = start + k * dt, k = 0..samples-1.
std::vector<double> regular_times(double start, double dt, std::size_t samples);

}  // namespace oudesign
