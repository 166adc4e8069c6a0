#pragma once

#include <span>

#include <Eigen/Dense>

#include "oudesign/block_matrix.hpp"
#include "oudesign/design.hpp"
#include "oudesign/params.hpp"

namespace oudesign {

struct Prediction {
  Eigen::Vector2d value;      // (Z1_hat(x), Z2_hat(x))
  Eigen::Vector2d mean_hat;   // GLS estimate of (m1, m2)
};

// Universal-kriging system for a fixed design. Holds the closed-form C^{-1},
// the FIM scalar G and an LU factorization of the bordered matrix
//
//   [ 0_2   H   ]
//   [ H^T   C(n)]
//
// so repeated evaluation at many x costs one triangular solve each.
class KrigingSystem {
 public:
  // Throws SingularityError if the bordered matrix is not invertible.
  KrigingSystem(Design design, OuParams params);

  const Design& design() const noexcept { return design_; }
  const OuParams& params() const noexcept { return params_; }
  double fim_scalar() const noexcept { return fim_g_; }

  // MSPE from the bordered-matrix trace formula. Values in [-1e-12, 0) are
  // clamped to 0.
  double mspe(double x) const;

  // MSPE from the expanded form
  //   v tr[I - Q C^{-1} Q^T + G^{-1} (I - Q C^{-1} H^T)(I - Q C^{-1} H^T)^T]
  // using the closed-form inverse. Not clamped.
  double mspe_expanded(double x) const;

  // BLUE at x from observations ordered (Z1(t1), Z2(t1), ..., Z1(tn), Z2(tn)).
  Prediction predict(double x, std::span<const double> observations) const;

 private:
  Eigen::MatrixXd correlation_row(double x) const;

  Design design_;
  OuParams params_;
  BlockMat c_inv_;
  double fim_g_;
  Eigen::FullPivLU<Eigen::MatrixXd> bordered_lu_;
};

double mspe_point(double x, const Design& design, const OuParams& params);

Prediction blue_predict(double x, std::span<const double> observations, const Design& design,
                        const OuParams& params);

}  // namespace oudesign
