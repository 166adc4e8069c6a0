#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "oudesign/design.hpp"
#include "oudesign/params.hpp"

namespace oudesign {

// g(d) = (1 - 2 e^{-lambda d} cos(omega d) + e^{-2 lambda d}) / (1 - e^{-2 lambda d}),
// g(0) = 0. Throws ArgumentError for d < 0.
double g_scalar(double d, const OuParams& params);

// G(n) with H C^{-1} H^T = G(n) I_2, i.e. 1 + sum_l g(d_l).
double fim_G(const Design& design, const OuParams& params);

// Integrals over [0, 1] of the kernel products appearing in the IMSPE:
//
//   rho(i, j) = int e^{-lambda (|x - t_i| + |x - t_j|)} dx
//   vee(i, j) = int e^{-lambda |x - t_i|} cos(omega (x - t_j)) dx
//
// evaluated in closed form from gap sums. Indices are 0-based.
struct RhoVeeTable {
  Eigen::MatrixXd rho;  // symmetric
  Eigen::MatrixXd vee;

  static RhoVeeTable build(const Design& design, const OuParams& params);
};

double rho(std::size_t i, std::size_t j, const Design& design, const OuParams& params);
double vee(std::size_t i, std::size_t j, const Design& design, const OuParams& params);

struct ImspeBreakdown {
  std::vector<double> g_values;  // g(d_i) per gap
  double G = 0.0;
  double A_n = 0.0;
  double B_n = 0.0;
  // B_n = sum of these: the leading 1 - 2 v_nn + rho_nn, the single sums over
  // v, over rho_{n,i} with the tail cosines, over the squared rho combination,
  // and the double sum over i > j.
  std::array<double, 5> b_terms{};
  double value = 0.0;  // 2 (1 - A_n + B_n / G)
};

// Closed-form IMSPE = (2 lambda / sigma^2) int_0^1 MSPE(x) dx.
ImspeBreakdown imspe_closed(const Design& design, const OuParams& params);

}  // namespace oudesign
