#include "oudesign/kriging.hpp"

#include <cmath>

#include "oudesign/covariance.hpp"
#include "oudesign/errors.hpp"
#include "oudesign/imspe.hpp"

namespace oudesign {
namespace {

constexpr double kMspeClamp = 1e-12;

Eigen::MatrixXd stacked_identity(std::size_t n) {
  Eigen::MatrixXd h(2, 2 * static_cast<Eigen::Index>(n));
  for (std::size_t i = 0; i < n; ++i) {
    h.block<2, 2>(0, 2 * static_cast<Eigen::Index>(i)).setIdentity();
  }
  return h;
}

}  // namespace

KrigingSystem::KrigingSystem(Design design, OuParams params)
    : design_(std::move(design)),
      params_(params),
      c_inv_(build_C_inv(design_, params_)),
      fim_g_(fim_G(design_, params_)) {
  const std::size_t n = design_.size();
  const auto m = static_cast<Eigen::Index>(2 * n + 2);
  Eigen::MatrixXd bordered = Eigen::MatrixXd::Zero(m, m);
  const Eigen::MatrixXd h = stacked_identity(n);
  bordered.block(0, 2, 2, m - 2) = h;
  bordered.block(2, 0, m - 2, 2) = h.transpose();
  bordered.block(2, 2, m - 2, m - 2) = build_C(design_, params_).dense();
  bordered_lu_.compute(bordered);
  if (!bordered_lu_.isInvertible()) {
    throw SingularityError("bordered kriging system is singular");
  }
}

Eigen::MatrixXd KrigingSystem::correlation_row(double x) const {
  return cross_Q(x, design_, params_) / params_.variance();
}

double KrigingSystem::mspe(double x) const {
  const std::size_t n = design_.size();
  const auto m = static_cast<Eigen::Index>(2 * n + 2);
  Eigen::MatrixXd rhs(m, 2);
  rhs.topRows(2).setIdentity();
  rhs.bottomRows(m - 2) = correlation_row(x).transpose();
  const Eigen::MatrixXd sol = bordered_lu_.solve(rhs);
  const double tr = 2.0 - (rhs.transpose() * sol).trace();
  const double value = params_.variance() * tr;
  if (value < 0.0 && value >= -kMspeClamp) return 0.0;
  return value;
}

double KrigingSystem::mspe_expanded(double x) const {
  const Eigen::MatrixXd q = correlation_row(x);
  const Eigen::MatrixXd q_cinv = q * c_inv_.dense();
  const Eigen::MatrixXd h = stacked_identity(design_.size());
  const Eigen::Matrix2d resid = Eigen::Matrix2d::Identity() - q_cinv * h.transpose();
  const double tr = 2.0 - (q_cinv * q.transpose()).trace() +
                    (resid * resid.transpose()).trace() / fim_g_;
  return params_.variance() * tr;
}

Prediction KrigingSystem::predict(double x, std::span<const double> observations) const {
  const std::size_t n = design_.size();
  if (observations.size() != 2 * n) {
    throw ArgumentError("observation vector must have length 2n");
  }
  const Eigen::Map<const Eigen::VectorXd> z(observations.data(),
                                            static_cast<Eigen::Index>(observations.size()));
  const Eigen::MatrixXd h = stacked_identity(n);
  const Eigen::VectorXd cinv_z = c_inv_.dense() * z;
  Prediction out;
  out.mean_hat = (h * cinv_z) / fim_g_;
  const Eigen::VectorXd centred = z - h.transpose() * out.mean_hat;
  out.value = out.mean_hat + correlation_row(x) * (c_inv_.dense() * centred);
  return out;
}

double mspe_point(double x, const Design& design, const OuParams& params) {
  return KrigingSystem(design, params).mspe(x);
}

Prediction blue_predict(double x, std::span<const double> observations, const Design& design,
                        const OuParams& params) {
  return KrigingSystem(design, params).predict(x, observations);
}

}  // namespace oudesign
