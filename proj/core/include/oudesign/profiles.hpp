#pragma once

#include <cstddef>
#include <vector>

#include "oudesign/design.hpp"
#include "oudesign/params.hpp"

namespace oudesign {

struct ProfileRow {
  double x;
  double mspe;
};

// MSPE on the uniform grid k / (grid_size - 1) merged with the design points
// (grid nodes within 1e-12 of a point collapse onto it), sorted by x. grid_size >= 2.
std::vector<ProfileRow> mspe_profile(const Design& design, const OuParams& params,
                                     std::size_t grid_size);

struct SurfaceRow {
  double lambda;
  double omega;
  double imspe;
};

// IMSPE of the equispaced n-point design over a lambda x omega grid
// (lambda-major). Both grids must be non-empty and lambda > 0.
std::vector<SurfaceRow> imspe_surface(std::size_t n_equispaced,
                                      const std::vector<double>& lambda_grid,
                                      const std::vector<double>& omega_grid);

struct XdRow {
  double d;
  double x;
  double mspe;
};

// MSPE of the three-point design {0, d, 1} over interior d values and an x
// grid on [0, 1] (d-major).
std::vector<XdRow> mspe_xd_surface(const OuParams& params, const std::vector<double>& d_grid,
                                   const std::vector<double>& x_grid);

struct SweepRow {
  double d;
  double imspe;
};

// IMSPE of {0, d, 1} for d = k / steps, k = 1..steps-1.
std::vector<SweepRow> imspe_three_point_sweep(const OuParams& params, std::size_t steps);

// Evenly spaced grid of `count` values from lo to hi inclusive (count >= 1).
std::vector<double> linspace(double lo, double hi, std::size_t count);

}  // namespace oudesign
