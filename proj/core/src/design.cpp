#include "oudesign/design.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "oudesign/errors.hpp"

namespace oudesign {
namespace {

constexpr double kEndpointTol = 1e-12;

}  // namespace

Design::Design(std::vector<double> points) : points_(std::move(points)) {
  if (points_.size() < 2) {
    throw ArgumentError("a design needs at least two points");
  }
  for (double t : points_) {
    if (!std::isfinite(t)) throw ArgumentError("design points must be finite");
  }
  if (std::abs(points_.front()) > kEndpointTol ||
      std::abs(points_.back() - 1.0) > kEndpointTol) {
    throw ArgumentError("design must start at 0 and end at 1");
  }
  points_.front() = 0.0;
  points_.back() = 1.0;

  gaps_.resize(points_.size() - 1);
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    const double d = points_[i + 1] - points_[i];
    if (d < 0.0) {
      throw ArgumentError("design points must be strictly increasing");
    }
    if (d < kMinGap) {
      throw SingularityError("coincident design points at index " + std::to_string(i));
    }
    gaps_[i] = d;
  }
}

Design Design::from_points(std::vector<double> points) {
  return Design(std::move(points));
}

Design Design::from_gaps(std::span<const double> gaps) {
  if (gaps.empty()) throw ArgumentError("a design needs at least one gap");
  const double total = std::accumulate(gaps.begin(), gaps.end(), 0.0);
  if (std::abs(total - 1.0) > kEndpointTol) {
    throw ArgumentError("gaps must sum to 1");
  }
  std::vector<double> points(gaps.size() + 1, 0.0);
  for (std::size_t i = 0; i < gaps.size(); ++i) {
    if (!(gaps[i] > 0.0)) throw ArgumentError("gaps must be positive");
    points[i + 1] = points[i] + gaps[i];
  }
  points.back() = 1.0;
  return Design(std::move(points));
}

Design Design::equispaced(std::size_t n) {
  if (n < 2) throw ArgumentError("equispaced design needs n >= 2");
  std::vector<double> points(n);
  for (std::size_t i = 0; i < n; ++i) {
    points[i] = static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return Design(std::move(points));
}

std::vector<double> Design::decay_factors(const OuParams& params) const {
  std::vector<double> out(gaps_.size());
  std::transform(gaps_.begin(), gaps_.end(), out.begin(),
                 [&](double d) { return std::exp(-params.lambda() * d); });
  return out;
}

double Design::max_gap() const noexcept {
  return *std::max_element(gaps_.begin(), gaps_.end());
}

}  // namespace oudesign
