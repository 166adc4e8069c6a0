#include "oudesign/simplex.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>
#include <mutex>

#include <gsl/gsl_errno.h>
#include <gsl/gsl_multimin.h>
#include <gsl/gsl_vector.h>

#include "oudesign/errors.hpp"

namespace oudesign {
namespace {

constexpr double kPenalty = 1e100;
constexpr std::size_t kStallWindow = 500;
constexpr double kStallSize = 1e-7;

struct Callback {
  const Objective* objective;
  std::vector<double> scratch;
};

double evaluate(const gsl_vector* v, void* data) {
  auto* cb = static_cast<Callback*>(data);
  for (std::size_t i = 0; i < cb->scratch.size(); ++i) cb->scratch[i] = gsl_vector_get(v, i);
  try {
    const double f = (*cb->objective)(cb->scratch);
    return std::isfinite(f) ? f : kPenalty;
  } catch (const Error&) {
    return kPenalty;
  }
}

struct VectorDeleter {
  void operator()(gsl_vector* v) const { gsl_vector_free(v); }
};
struct MinimizerDeleter {
  void operator()(gsl_multimin_fminimizer* m) const { gsl_multimin_fminimizer_free(m); }
};

}  // namespace

std::vector<double> gaps_from_logits(std::span<const double> logits) {
  std::vector<double> gaps(logits.begin(), logits.end());
  gaps.push_back(0.0);
  const double top = *std::max_element(gaps.begin(), gaps.end());
  double total = 0.0;
  for (auto& g : gaps) {
    g = std::exp(g - top);
    total += g;
  }
  for (auto& g : gaps) g /= total;
  return gaps;
}

SimplexResult nelder_mead(const Objective& objective, std::vector<double> start,
                          const SimplexOptions& options) {
  static std::once_flag handler_flag;
  std::call_once(handler_flag, [] { gsl_set_error_handler_off(); });

  SimplexResult out;
  const std::size_t dim = start.size();
  Callback cb{&objective, std::vector<double>(dim)};
  if (dim == 0) {
    out.value = objective(start);
    out.converged = true;
    return out;
  }

  gsl_multimin_function fn{&evaluate, dim, &cb};
  std::unique_ptr<gsl_vector, VectorDeleter> x(gsl_vector_alloc(dim));
  std::unique_ptr<gsl_vector, VectorDeleter> step(gsl_vector_alloc(dim));
  std::unique_ptr<gsl_multimin_fminimizer, MinimizerDeleter> minimizer(
      gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, dim));

  out.x = std::move(start);
  for (std::size_t round = 0; round <= options.restarts; ++round) {
    for (std::size_t i = 0; i < dim; ++i) gsl_vector_set(x.get(), i, out.x[i]);
    gsl_vector_set_all(step.get(), options.step);
    if (gsl_multimin_fminimizer_set(minimizer.get(), &fn, x.get(), step.get()) != GSL_SUCCESS) {
      throw ConvergenceError("nelder_mead: could not initialize simplex", kPenalty);
    }
    int status = GSL_CONTINUE;
    std::size_t iter = 0;
    double best_value = std::numeric_limits<double>::infinity();
    std::size_t since_improvement = 0;
    bool stalled = false;
    while (status == GSL_CONTINUE && iter < options.max_iters) {
      ++iter;
      if (gsl_multimin_fminimizer_iterate(minimizer.get()) != GSL_SUCCESS) break;
      const double size = gsl_multimin_fminimizer_size(minimizer.get());
      status = gsl_multimin_test_size(size, options.x_tol);
      // Near a flat optimum the vertex values tie in floating point and the
      // simplex stops shrinking; a small simplex with no progress counts as
      // converged.
      const double value = gsl_multimin_fminimizer_minimum(minimizer.get());
      if (value < best_value) {
        best_value = value;
        since_improvement = 0;
      } else if (++since_improvement >= kStallWindow) {
        stalled = size <= kStallSize;
        break;
      }
    }
    out.iterations += iter;
    out.converged = status == GSL_SUCCESS || stalled;
    const gsl_vector* best = gsl_multimin_fminimizer_x(minimizer.get());
    for (std::size_t i = 0; i < dim; ++i) out.x[i] = gsl_vector_get(best, i);
    out.value = gsl_multimin_fminimizer_minimum(minimizer.get());
  }
  return out;
}

}  // namespace oudesign
