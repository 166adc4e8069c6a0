#include "oudesign/polar_data.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <string_view>

#include "oudesign/errors.hpp"

namespace oudesign {
namespace {

constexpr double kSpacingRelTol = 1e-6;

bool parse_double(std::string_view token, double& out) {
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc() && ptr == last && std::isfinite(out);
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

}  // namespace

void PolarMotionSeries::validate() const {
  if (epochs.size() != x.size() || epochs.size() != y.size()) {
    throw ArgumentError("series columns have different lengths");
  }
  if (epochs.size() < 2) throw ArgumentError("series needs at least two samples");
  for (std::size_t k = 0; k < epochs.size(); ++k) {
    if (!std::isfinite(epochs[k]) || !std::isfinite(x[k]) || !std::isfinite(y[k])) {
      throw ArgumentError("series contains non-finite values");
    }
    if (k > 0 && !(epochs[k] > epochs[k - 1])) {
      throw ArgumentError("series epochs must be strictly increasing");
    }
  }
}

ParseResult parse_eop(std::istream& in, const ColumnConfig& columns) {
  ParseResult out;
  auto& s = out.series;
  const std::size_t needed = std::max({columns.epoch, columns.x, columns.y}) + 1;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      ++out.skipped_lines;
      continue;
    }
    const auto tokens = split_ws(line);
    double epoch = 0.0, x = 0.0, y = 0.0;
    if (tokens.size() < needed || !parse_double(tokens[columns.epoch], epoch) ||
        !parse_double(tokens[columns.x], x) || !parse_double(tokens[columns.y], y)) {
      ++out.skipped_lines;
      continue;
    }
    if (!s.epochs.empty() && epoch == s.epochs.back()) {
      s.x.back() = x;
      s.y.back() = y;
      ++out.duplicate_epochs;
      continue;
    }
    if (!s.epochs.empty() && epoch < s.epochs.back()) {
      throw FormatError("epochs not increasing at line " + std::to_string(line_no));
    }
    s.epochs.push_back(epoch);
    s.x.push_back(x);
    s.y.push_back(y);
  }
  if (s.epochs.empty()) throw FormatError("no parseable data rows");
  return out;
}

TrendFit fit_trend(const PolarMotionSeries& series, double cycles_per_year) {
  series.validate();
  if (series.size() < 5) throw ArgumentError("fit_trend needs at least 5 samples");
  if (!std::isfinite(cycles_per_year)) throw ArgumentError("frequency must be finite");
  const auto n = static_cast<Eigen::Index>(series.size());

  TrendFit out;
  out.cycles_per_year = cycles_per_year;
  out.residuals = series;

  if (cycles_per_year == 0.0) {
    double mx = 0.0, my = 0.0;
    for (Eigen::Index k = 0; k < n; ++k) {
      mx += series.x[static_cast<std::size_t>(k)];
      my += series.y[static_cast<std::size_t>(k)];
    }
    out.mean_hat = {mx / static_cast<double>(n), my / static_cast<double>(n)};
    out.m_hat = {0.0, 0.0};
    out.confounded = true;
    for (std::size_t k = 0; k < series.size(); ++k) {
      out.residuals.x[k] -= out.mean_hat.real();
      out.residuals.y[k] -= out.mean_hat.imag();
    }
    return out;
  }

  // Real form: x = c1 + m1 cos th - m2 sin th,  y = c2 + m1 sin th + m2 cos th.
  Eigen::MatrixXd design(2 * n, 4);
  Eigen::VectorXd rhs(2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    const double th = 2.0 * std::numbers::pi * cycles_per_year * series.epochs[idx];
    const double c = std::cos(th), s = std::sin(th);
    design.row(2 * k) << 1.0, 0.0, c, -s;
    design.row(2 * k + 1) << 0.0, 1.0, s, c;
    rhs(2 * k) = series.x[idx];
    rhs(2 * k + 1) = series.y[idx];
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  qr.setThreshold(1e-10);
  if (qr.rank() < 4) {
    throw DegeneracyError("trend regressors are rank deficient at this frequency");
  }
  const Eigen::Vector4d coef = qr.solve(rhs);
  out.mean_hat = {coef(0), coef(1)};
  out.m_hat = {coef(2), coef(3)};
  const Eigen::VectorXd resid = rhs - design * coef;
  for (Eigen::Index k = 0; k < n; ++k) {
    out.residuals.x[static_cast<std::size_t>(k)] = resid(2 * k);
    out.residuals.y[static_cast<std::size_t>(k)] = resid(2 * k + 1);
  }
  return out;
}

EstimationResult estimate_ou(const PolarMotionSeries& residuals, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw ArgumentError("dt must be positive");
  residuals.validate();
  const std::size_t n = residuals.size();
  if (n < 10) throw ArgumentError("estimate_ou needs at least 10 samples");
  for (std::size_t k = 1; k < n; ++k) {
    const double step = residuals.epochs[k] - residuals.epochs[k - 1];
    if (std::abs(step - dt) > kSpacingRelTol * dt) {
      throw ArgumentError("residual series is not equally spaced at dt");
    }
  }

  // Normal equations of Y_{k+1} = B Y_k.
  Eigen::Matrix2d sxx = Eigen::Matrix2d::Zero();
  Eigen::Matrix2d syx = Eigen::Matrix2d::Zero();
  double sum_sq = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const Eigen::Vector2d prev(residuals.x[k], residuals.y[k]);
    const Eigen::Vector2d next(residuals.x[k + 1], residuals.y[k + 1]);
    sxx += prev * prev.transpose();
    syx += next * prev.transpose();
    sum_sq += prev.squaredNorm();
  }
  if (sxx.determinant() <= 0.0) throw EstimationError("residuals have no variation");

  EstimationResult out;
  out.sample_count = n;
  out.transition_hat = syx * sxx.inverse();
  const Eigen::Matrix2d& b_hat = out.transition_hat;
  const double a = 0.5 * (b_hat(0, 0) + b_hat(1, 1));
  const double b = 0.5 * (b_hat(0, 1) - b_hat(1, 0));
  const double r2 = a * a + b * b;
  if (r2 >= 1.0) {
    throw EstimationError("non-contractive transition fit; residuals look non-stationary");
  }
  const double r = std::sqrt(r2);
  out.decay_hat = r;
  out.lambda_hat = -std::log(r) / dt;
  const double angle = std::atan2(b, a);
  out.omega_hat = angle / dt;

  Eigen::Matrix2d rot;
  rot << a, b, -b, a;
  double resid_sq = 0.0;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const Eigen::Vector2d prev(residuals.x[k], residuals.y[k]);
    const Eigen::Vector2d next(residuals.x[k + 1], residuals.y[k + 1]);
    resid_sq += (next - rot * prev).squaredNorm();
  }
  const double transitions = static_cast<double>(n - 1);
  out.innovation_variance = resid_sq / (2.0 * transitions);
  out.sigma_hat = std::sqrt(2.0 * out.lambda_hat * out.innovation_variance /
                            -std::expm1(-2.0 * out.lambda_hat * dt));

  // Var(a_hat) = Var(b_hat) ~ s^2 / sum |Y_k|^2; propagate through ln r and atan2.
  const double coef_se = std::sqrt(out.innovation_variance / sum_sq);
  out.lambda_se = r > 0.0 ? coef_se / (r * dt) : std::numeric_limits<double>::infinity();
  out.omega_se = out.lambda_se;
  out.low_confidence = r < 3.0 * coef_se;
  out.aliasing_flag = std::abs(angle) > 0.9 * std::numbers::pi;
  return out;
}

PolarMotionSeries regular_subset(const PolarMotionSeries& series, double dt) {
  if (!(dt > 0.0)) throw ArgumentError("dt must be positive");
  series.validate();
  PolarMotionSeries out;
  const double origin = series.epochs.front();
  for (std::size_t k = 0; k < series.size(); ++k) {
    const double steps = (series.epochs[k] - origin) / dt;
    if (std::abs(steps - std::round(steps)) <= kSpacingRelTol) {
      out.epochs.push_back(series.epochs[k]);
      out.x.push_back(series.x[k]);
      out.y.push_back(series.y[k]);
    }
  }
  return out;
}

EstimationResult estimate_from_series(const PolarMotionSeries& series, double cycles_per_year,
                                      double dt) {
  const TrendFit trend = fit_trend(series, cycles_per_year);
  EstimationResult out = estimate_ou(trend.residuals, dt);
  out.m_hat = trend.m_hat;
  out.mean_hat = trend.mean_hat;
  return out;
}

double median_spacing(const PolarMotionSeries& series) {
  series.validate();
  std::vector<double> steps(series.size() - 1);
  for (std::size_t k = 1; k < series.size(); ++k) {
    steps[k - 1] = series.epochs[k] - series.epochs[k - 1];
  }
  const auto mid = steps.begin() + static_cast<std::ptrdiff_t>(steps.size() / 2);
  std::nth_element(steps.begin(), mid, steps.end());
  if (steps.size() % 2 == 1) return *mid;
  return 0.5 * (*mid + *std::max_element(steps.begin(), mid));
}

}  // namespace oudesign
