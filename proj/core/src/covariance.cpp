#include "oudesign/covariance.hpp"

#include <cmath>

#include "oudesign/errors.hpp"

namespace oudesign {

Mat2 rotation_exp(const OuParams& params, double tau) {
  if (!(tau >= 0.0)) throw ArgumentError("rotation_exp requires tau >= 0");
  const double decay = std::exp(-params.lambda() * tau);
  const double c = std::cos(params.omega() * tau);
  const double s = std::sin(params.omega() * tau);
  Mat2 out;
  out << decay * c, decay * s,
        -decay * s, decay * c;
  return out;
}

Mat2 cov_R(const OuParams& params, double tau) {
  if (tau < 0.0) return cov_R(params, -tau).transpose();
  return params.variance() * rotation_exp(params, tau);
}

std::complex<double> complex_cov(const OuParams& params, double tau) {
  const Mat2 r = cov_R(params, tau);
  return 2.0 * std::complex<double>(r(0, 0), r(1, 0));
}

BlockMat build_C(const Design& design, const OuParams& params) {
  const auto t = design.points();
  const std::size_t n = design.size();
  BlockMat out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out.set_block(i, i, Mat2::Identity());
    for (std::size_t j = 0; j < i; ++j) {
      const Mat2 e = rotation_exp(params, t[i] - t[j]);
      out.set_block(i, j, e);
      out.set_block(j, i, e.transpose());
    }
  }
  return out;
}

BlockMat build_C_inv(const Design& design, const OuParams& params) {
  const auto d = design.gaps();
  const std::size_t n = design.size();
  BlockMat out(n);

  // u[k] is the scalar in U_k = u[k] I.
  std::vector<double> u(n - 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double one_minus_pi2 = -std::expm1(-2.0 * params.lambda() * d[k]);
    if (!(one_minus_pi2 > 0.0)) throw SingularityError("zero gap in design");
    u[k] = 1.0 / one_minus_pi2;
  }

  for (std::size_t k = 0; k < n; ++k) {
    // First block U_1, last U_{n-1}, interior V_k = U_k + pi_{k-1}^2 U_{k-1}.
    double diag;
    if (k + 1 == n) {
      diag = u[k - 1];
    } else {
      diag = u[k];
      if (k > 0) diag += std::exp(-2.0 * params.lambda() * d[k - 1]) * u[k - 1];
    }
    out.set_block(k, k, diag * Mat2::Identity());
  }
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const Mat2 e = rotation_exp(params, d[k]);
    out.set_block(k + 1, k, -u[k] * e);
    out.set_block(k, k + 1, -u[k] * e.transpose());
  }
  return out;
}

Eigen::MatrixXd cross_Q(double x, const Design& design, const OuParams& params,
                        CrossCovOptions options) {
  if (!std::isfinite(x)) throw ArgumentError("prediction location must be finite");
  if (!options.allow_extrapolation && (x < 0.0 || x > 1.0)) {
    throw ArgumentError("prediction location outside [0, 1]");
  }
  const auto t = design.points();
  Eigen::MatrixXd out(2, 2 * static_cast<Eigen::Index>(design.size()));
  for (std::size_t i = 0; i < design.size(); ++i) {
    out.block<2, 2>(0, 2 * static_cast<Eigen::Index>(i)) = cov_R(params, x - t[i]);
  }
  return out;
}

}  // namespace oudesign
