#include "oudesign/profiles.hpp"

#include <algorithm>
#include <cmath>

#include "oudesign/errors.hpp"
#include "oudesign/imspe.hpp"
#include "oudesign/kriging.hpp"

namespace oudesign {

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  if (count == 0) throw ArgumentError("linspace needs count >= 1");
  if (count == 1) return {lo};
  std::vector<double> out(count);
  const double step = (hi - lo) / static_cast<double>(count - 1);
  for (std::size_t k = 0; k < count; ++k) out[k] = lo + static_cast<double>(k) * step;
  out.back() = hi;
  return out;
}

std::vector<ProfileRow> mspe_profile(const Design& design, const OuParams& params,
                                     std::size_t grid_size) {
  if (grid_size < 2) throw ArgumentError("profile grid needs at least two points");
  // Grid nodes within 1e-12 of a design point are replaced by the point itself.
  const auto pts = design.points();
  std::vector<double> xs(pts.begin(), pts.end());
  for (double x : linspace(0.0, 1.0, grid_size)) {
    const auto near = std::lower_bound(pts.begin(), pts.end(), x - 1e-12);
    if (near == pts.end() || *near > x + 1e-12) xs.push_back(x);
  }
  std::sort(xs.begin(), xs.end());

  const KrigingSystem system(design, params);
  std::vector<ProfileRow> rows;
  rows.reserve(xs.size());
  for (double x : xs) rows.push_back({x, system.mspe(x)});
  return rows;
}

std::vector<SurfaceRow> imspe_surface(std::size_t n_equispaced,
                                      const std::vector<double>& lambda_grid,
                                      const std::vector<double>& omega_grid) {
  if (lambda_grid.empty() || omega_grid.empty()) {
    throw ArgumentError("surface grids must be non-empty");
  }
  const Design design = Design::equispaced(n_equispaced);
  std::vector<SurfaceRow> rows;
  rows.reserve(lambda_grid.size() * omega_grid.size());
  for (double lambda : lambda_grid) {
    for (double omega : omega_grid) {
      rows.push_back({lambda, omega,
                      imspe_closed(design, OuParams::normalized(lambda, omega)).value});
    }
  }
  return rows;
}

std::vector<XdRow> mspe_xd_surface(const OuParams& params, const std::vector<double>& d_grid,
                                   const std::vector<double>& x_grid) {
  std::vector<XdRow> rows;
  rows.reserve(d_grid.size() * x_grid.size());
  for (double d : d_grid) {
    const KrigingSystem system(Design::from_points({0.0, d, 1.0}), params);
    for (double x : x_grid) rows.push_back({d, x, system.mspe(x)});
  }
  return rows;
}

std::vector<SweepRow> imspe_three_point_sweep(const OuParams& params, std::size_t steps) {
  if (steps < 2) throw ArgumentError("sweep needs at least two steps");
  std::vector<SweepRow> rows;
  rows.reserve(steps - 1);
  for (std::size_t k = 1; k < steps; ++k) {
    const double d = static_cast<double>(k) / static_cast<double>(steps);
    rows.push_back({d, imspe_closed(Design::from_points({0.0, d, 1.0}), params).value});
  }
  return rows;
}

}  // namespace oudesign
