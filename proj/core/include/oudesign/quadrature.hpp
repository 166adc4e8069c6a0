#pragma once

#include <cstddef>

#include "oudesign/design.hpp"
#include "oudesign/params.hpp"

namespace oudesign {

struct QuadratureOptions {
  double tol = 1e-10;           // relative tolerance on the total, in [1e-12, 1e-4]
  unsigned max_depth = 15;      // bisection budget per panel
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
};

// (2 lambda / sigma^2) int_0^1 MSPE(x) dx by adaptive Gauss-Kronrod (7/15)
// on each [t_i, t_{i+1}], where the integrand is smooth. Throws
// ConvergenceError carrying the best estimate when a panel misses the
// tolerance within its depth budget.
QuadratureResult imspe_quadrature(const Design& design, const OuParams& params,
                                  QuadratureOptions options = {});

}  // namespace oudesign
