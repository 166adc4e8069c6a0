#pragma once

#include <complex>
#include <cstddef>
#include <istream>
#include <vector>

#include <Eigen/Dense>

namespace oudesign {

// Pole coordinates against decimal-year epochs. Epochs strictly increase.
struct PolarMotionSeries {
  std::vector<double> epochs;  // decimal years
  std::vector<double> x;       // arcsec
  std::vector<double> y;       // arcsec

  std::size_t size() const noexcept { return epochs.size(); }
  // Throws ArgumentError on length mismatch, fewer than 2 samples,
  // non-increasing epochs or non-finite values.
  void validate() const;
};

// 0-based whitespace-separated column indices. The defaults match the EOP C01
// layout (epoch, x, sigma_x, y, sigma_y, ...).
struct ColumnConfig {
  std::size_t epoch = 0;
  std::size_t x = 1;
  std::size_t y = 3;
};

struct ParseResult {
  PolarMotionSeries series;
  std::size_t duplicate_epochs = 0;  // rows replaced by a later row
  std::size_t skipped_lines = 0;     // comments, headers, short or non-numeric rows
};

// Lines starting with '#' and lines whose needed columns are not numeric are
// skipped. A repeated epoch replaces the previous row. Throws FormatError if
// nothing parses or epochs go backwards.
ParseResult parse_eop(std::istream& in, const ColumnConfig& columns = {});

inline constexpr double kAnnualCyclesPerYear = 1.0;
// 435-day Chandler period in cycles per Julian year.
inline constexpr double kChandlerCyclesPerYear = 365.25 / 435.0;

struct TrendFit {
  std::complex<double> mean_hat;  // constant offset c
  std::complex<double> m_hat;     // amplitude of e^{i 2 pi f t}
  PolarMotionSeries residuals;
  double cycles_per_year = 0.0;
  // f == 0: the periodic regressor equals the constant, only the mean is removed.
  bool confounded = false;
};

// Complex least squares of Z(t) = c + m e^{i 2 pi f t} on (x + i y).
// Needs >= 5 samples. Throws DegeneracyError when the regressors are rank
// deficient for f != 0.
TrendFit fit_trend(const PolarMotionSeries& series, double cycles_per_year);

struct EstimationResult {
  double lambda_hat = 0.0;  // 1/yr
  double omega_hat = 0.0;   // rad/yr
  double sigma_hat = 0.0;
  std::complex<double> m_hat{};
  std::complex<double> mean_hat{};
  Eigen::Matrix2d transition_hat = Eigen::Matrix2d::Zero();  // unconstrained LS fit
  double decay_hat = 0.0;   // sqrt(a^2 + b^2) of the rotation-family projection
  double innovation_variance = 0.0;  // per coordinate
  double lambda_se = 0.0;   // delta-method standard errors
  double omega_se = 0.0;
  std::size_t sample_count = 0;
  bool low_confidence = false;  // decay not distinguishable from 0
  bool aliasing_flag = false;   // |omega_hat dt| close to pi
};

// Exact-transition least squares on equally spaced residuals:
// fit Y_{k+1} = B Y_k + eps, project B onto
// a [[1, 0], [0, 1]] + b [[0, 1], [-1, 0]], then
// lambda = -ln sqrt(a^2 + b^2) / dt, omega = atan2(b, a) / dt and
// sigma^2 = 2 lambda s^2 / (1 - e^{-2 lambda dt}) with s^2 the per-coordinate
// innovation variance. Needs >= 10 samples spaced dt apart (relative
// tolerance 1e-6). Throws ArgumentError for dt <= 0 or irregular spacing and
// EstimationError when a^2 + b^2 >= 1.
EstimationResult estimate_ou(const PolarMotionSeries& residuals, double dt);

// Keeps the samples that lie on the grid epochs[0] + k dt (within 1e-6 dt).
PolarMotionSeries regular_subset(const PolarMotionSeries& series, double dt);

// fit_trend followed by estimate_ou, with trend estimates copied into the result.
EstimationResult estimate_from_series(const PolarMotionSeries& series, double cycles_per_year,
                                      double dt);

// Median spacing of the epochs.
double median_spacing(const PolarMotionSeries& series);

}  // namespace oudesign
