#include "oudesign/entropy.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <Eigen/Dense>

#include "oudesign/covariance.hpp"
#include "oudesign/errors.hpp"
#include "oudesign/simplex.hpp"

namespace oudesign {

double logdet_C_oracle(const Design& design, const OuParams& params) {
  const Eigen::LDLT<Eigen::MatrixXd> ldlt(build_C(design, params).dense());
  if (ldlt.info() != Eigen::Success) {
    throw SingularityError("LDLT factorization of C(n) failed");
  }
  const Eigen::VectorXd pivots = ldlt.vectorD();
  double out = 0.0;
  for (Eigen::Index i = 0; i < pivots.size(); ++i) {
    if (!(pivots(i) > 0.0)) {
      throw SingularityError("C(n) is not positive definite");
    }
    out += std::log(pivots(i));
  }
  return out;
}

double logdet_C_closed(const Design& design, const OuParams& params) {
  double out = 0.0;
  for (double d : design.gaps()) {
    const double factor = -std::expm1(-2.0 * params.lambda() * d);
    if (!(factor > 0.0)) throw SingularityError("zero gap in design");
    out += 2.0 * std::log(factor);
  }
  return out;
}

double logdet_C_printed(const Design& design, const OuParams& params) {
  double out = 0.0;
  for (double d : design.gaps()) {
    const double factor = 1.0 - 2.0 * std::exp(-2.0 * params.lambda() * d);
    if (!(factor > 0.0)) return std::numeric_limits<double>::quiet_NaN();
    out += std::log(factor);
  }
  return out;
}

bool printed_form_undefined(const Design& design, const OuParams& params) {
  const double threshold = std::numbers::ln2 / (2.0 * params.lambda());
  for (double d : design.gaps()) {
    if (d <= threshold) return true;
  }
  return false;
}

DeterminantArbitration arbitrate_determinant(const Design& design, const OuParams& params,
                                             double tol) {
  DeterminantArbitration out;
  out.oracle = logdet_C_oracle(design, params);
  out.squared_form = logdet_C_closed(design, params);
  out.printed_form = logdet_C_printed(design, params);
  out.squared_matches = std::abs(out.squared_form - out.oracle) <= tol;
  out.printed_matches =
      std::isfinite(out.printed_form) && std::abs(out.printed_form - out.oracle) <= tol;
  return out;
}

EntropyValue entropy(const Design& design, const OuParams& params) {
  const double n = static_cast<double>(design.size());
  const double sigma2 = params.is_normalized() ? 2.0 * params.lambda()
                                               : params.sigma() * params.sigma();
  EntropyValue out;
  out.logdet = logdet_C_closed(design, params);
  out.value = n * (1.0 + std::log(std::numbers::pi * sigma2 / params.lambda())) +
              0.5 * out.logdet;
  return out;
}

Design optimize_entropy_check(std::size_t n, const OuParams& params,
                              EntropyCheckOptions options) {
  if (n < 3) throw ArgumentError("optimize_entropy_check requires n >= 3");
  if (options.n_starts == 0) throw ArgumentError("n_starts must be >= 1");
  const std::size_t dim = n - 2;
  auto objective = [&](std::span<const double> logits) {
    return -logdet_C_closed(Design::from_gaps(gaps_from_logits(logits)), params);
  };

  std::optional<SimplexResult> best;
  for (std::size_t s = 0; s < options.n_starts; ++s) {
    std::seed_seq seq{options.seed, static_cast<std::uint64_t>(s)};
    std::mt19937_64 rng(seq);
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<double> start(dim);
    for (auto& u : start) u = normal(rng);
    auto result = nelder_mead(objective, start, {.step = 0.5, .x_tol = options.x_tol,
                                                 .max_iters = options.max_iters});
    if (!result.converged) continue;
    if (!best || result.value < best->value) best = std::move(result);
  }
  if (!best) {
    throw ConvergenceError("entropy maximization did not converge from any start",
                           std::numeric_limits<double>::quiet_NaN());
  }
  return Design::from_gaps(gaps_from_logits(best->x));
}

}  // namespace oudesign
