#include "oudesign/quadrature.hpp"

#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "oudesign/errors.hpp"
#include "oudesign/kriging.hpp"

namespace oudesign {

QuadratureResult imspe_quadrature(const Design& design, const OuParams& params,
                                  QuadratureOptions options) {
  if (!(options.tol >= 1e-12 && options.tol <= 1e-4)) {
    throw ArgumentError("quadrature tolerance must lie in [1e-12, 1e-4]");
  }
  const KrigingSystem system(design, params);
  const double scale = 1.0 / params.variance();
  auto integrand = [&](double x) { return system.mspe(x); };

  using Kronrod = boost::math::quadrature::gauss_kronrod<double, 15>;
  const auto t = design.points();
  QuadratureResult out;
  double total_l1 = 0.0;
  for (std::size_t i = 0; i + 1 < t.size(); ++i) {
    double error = 0.0;
    double l1 = 0.0;
    out.value +=
        Kronrod::integrate(integrand, t[i], t[i + 1], options.max_depth, options.tol, &error, &l1);
    out.error_estimate += error;
    total_l1 += l1;
  }
  // Relative to the whole integral: very thin panels integrate to roundoff
  // level and cannot meet a per-panel relative target.
  const bool converged = out.error_estimate <= options.tol * total_l1;
  out.value *= scale;
  out.error_estimate *= scale;
  if (!converged) {
    throw ConvergenceError("imspe_quadrature: tolerance " + std::to_string(options.tol) +
                               " not reached within the panel budget",
                           out.value);
  }
  return out;
}

}  // namespace oudesign
