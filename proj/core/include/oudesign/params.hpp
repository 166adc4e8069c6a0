#pragma once

#include <complex>

namespace oudesign {

// Model parameters of the trend-shifted complex Ornstein-Uhlenbeck process
//
//   Z(t) = m + Y(t),   dY = -(lambda - i omega) Y dt + sigma dW,
//
// with damping `lambda` > 0, angular frequency `omega` and diffusion scale
// `sigma` > 0. In normalized mode the marginal variance sigma^2 / (2 lambda)
// of each coordinate is fixed to 1 (sigma^2 = 2 lambda), which turns the
// covariance function into a correlation function.
class OuParams {
 public:
  // sigma^2 / (2 lambda) = 1.
  static OuParams normalized(double lambda, double omega);
  // Raw diffusion scale; variance() = sigma^2 / (2 lambda).
  static OuParams with_sigma(double lambda, double omega, double sigma);

  OuParams with_trend(double m1, double m2) const;

  double lambda() const noexcept { return lambda_; }
  double omega() const noexcept { return omega_; }
  double sigma() const noexcept { return sigma_; }
  double m1() const noexcept { return m1_; }
  double m2() const noexcept { return m2_; }
  std::complex<double> trend() const noexcept { return {m1_, m2_}; }
  bool is_normalized() const noexcept { return normalized_; }

  // Marginal variance of Y1 and Y2.
  double variance() const noexcept;

  // Same model with omega replaced by -omega.
  OuParams mirrored() const;

 private:
  OuParams(double lambda, double omega, double sigma, bool normalized);

  double lambda_;
  double omega_;
  double sigma_;
  double m1_ = 0.0;
  double m2_ = 0.0;
  bool normalized_;
};

}  // namespace oudesign
