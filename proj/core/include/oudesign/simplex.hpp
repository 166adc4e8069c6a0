#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

namespace oudesign {

// Maps n - 2 unconstrained logits to n - 1 positive gaps summing to one
// (softmax with the last logit pinned at zero).
std::vector<double> gaps_from_logits(std::span<const double> logits);

struct SimplexOptions {
  double step = 0.5;            // initial simplex edge
  double x_tol = 1e-10;         // simplex size at convergence
  std::size_t max_iters = 20000;
  std::size_t restarts = 1;     // fresh simplices built around the previous optimum
};

struct SimplexResult {
  std::vector<double> x;
  double value = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
};

using Objective = std::function<double(std::span<const double>)>;

// Derivative-free Nelder-Mead minimization (GSL nmsimplex2). Exceptions and
// non-finite values from the objective are treated as a large penalty. For an
// empty start vector the objective is evaluated once.
SimplexResult nelder_mead(const Objective& objective, std::vector<double> start,
                          const SimplexOptions& options = {});

}  // namespace oudesign
