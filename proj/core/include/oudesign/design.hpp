#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "oudesign/params.hpp"

namespace oudesign {

// Gaps below this are treated as coincident points.
inline constexpr double kMinGap = 1e-9;

// Ordered sampling locations 0 = t_1 < ... < t_n = 1 on the prediction
// interval. Immutable once constructed; every instance satisfies n >= 2,
// pinned endpoints and gaps >= kMinGap.
class Design {
 public:
  // Endpoints within 1e-12 of 0 and 1 are snapped. Throws ArgumentError for
  // unsorted or out-of-range points and SingularityError for coincident ones.
  static Design from_points(std::vector<double> points);
  // Gaps must be positive and sum to 1 within 1e-12.
  static Design from_gaps(std::span<const double> gaps);
  static Design equispaced(std::size_t n);

  std::size_t size() const noexcept { return points_.size(); }
  std::span<const double> points() const noexcept { return points_; }
  std::span<const double> gaps() const noexcept { return gaps_; }
  double point(std::size_t i) const { return points_.at(i); }
  double gap(std::size_t i) const { return gaps_.at(i); }

  // pi_i = exp(-lambda d_i), one per gap.
  std::vector<double> decay_factors(const OuParams& params) const;

  double max_gap() const noexcept;

 private:
  explicit Design(std::vector<double> points);

  std::vector<double> points_;
  std::vector<double> gaps_;
};

}  // namespace oudesign
