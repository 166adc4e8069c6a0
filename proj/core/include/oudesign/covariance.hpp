#pragma once

#include <complex>

#include "oudesign/block_matrix.hpp"
#include "oudesign/design.hpp"
#include "oudesign/params.hpp"

namespace oudesign {

// Damped rotation e^{-lambda tau} [[cos w tau, sin w tau], [-sin w tau, cos w tau]].
// Throws ArgumentError for tau < 0.
Mat2 rotation_exp(const OuParams& params, double tau);

// Stationary cross-covariance E[Y(t + tau) Y(t)^T] = variance * rotation_exp(tau).
// For tau < 0 the transpose of the |tau| value is returned.
Mat2 cov_R(const OuParams& params, double tau);

// E[Y(t + tau) conj(Y(t))] = (sigma^2 / lambda) e^{-lambda tau} (cos w tau - i sin w tau).
std::complex<double> complex_cov(const OuParams& params, double tau);

// Correlation matrix C(n) of the stacked observation vector
// (Z1(t1), Z2(t1), ..., Z1(tn), Z2(tn)). Block (i, j) with i > j is
// rotation_exp(t_i - t_j), block (j, i) its transpose, diagonal blocks I.
BlockMat build_C(const Design& design, const OuParams& params);

// Closed-form block-tridiagonal inverse of build_C. Uses
// U_k = (1 - pi_k^2)^{-1} I, which holds because A + A^T = -2 lambda I.
BlockMat build_C_inv(const Design& design, const OuParams& params);

struct CrossCovOptions {
  bool allow_extrapolation = false;
};

// 2 x 2n covariance between Z(x) and the observations: block i is
// cov_R(x - t_i). Throws ArgumentError for x outside [0, 1] unless
// extrapolation is allowed.
Eigen::MatrixXd cross_Q(double x, const Design& design, const OuParams& params,
                        CrossCovOptions options = {});

}  // namespace oudesign
