#include "oudesign/params.hpp"

#include <cmath>

#include "oudesign/errors.hpp"

namespace oudesign {

OuParams::OuParams(double lambda, double omega, double sigma, bool normalized)
    : lambda_(lambda), omega_(omega), sigma_(sigma), normalized_(normalized) {
  if (!std::isfinite(lambda) || lambda <= 0.0) {
    throw ArgumentError("lambda must be finite and strictly positive");
  }
  if (!std::isfinite(omega)) {
    throw ArgumentError("omega must be finite");
  }
  if (!std::isfinite(sigma) || sigma <= 0.0) {
    throw ArgumentError("sigma must be finite and strictly positive");
  }
}

OuParams OuParams::normalized(double lambda, double omega) {
  const double sigma = lambda > 0.0 ? std::sqrt(2.0 * lambda) : 0.0;
  return OuParams(lambda, omega, sigma, true);
}

OuParams OuParams::with_sigma(double lambda, double omega, double sigma) {
  return OuParams(lambda, omega, sigma, false);
}

OuParams OuParams::with_trend(double m1, double m2) const {
  if (!std::isfinite(m1) || !std::isfinite(m2)) {
    throw ArgumentError("trend components must be finite");
  }
  OuParams out = *this;
  out.m1_ = m1;
  out.m2_ = m2;
  return out;
}

double OuParams::variance() const noexcept {
  return normalized_ ? 1.0 : sigma_ * sigma_ / (2.0 * lambda_);
}

OuParams OuParams::mirrored() const {
  OuParams out = *this;
  out.omega_ = -omega_;
  return out;
}

}  // namespace oudesign
