#pragma once

#include <cstddef>
#include <cstdint>

#include "oudesign/design.hpp"
#include "oudesign/params.hpp"

namespace oudesign {

struct EntropyValue {
  double logdet = 0.0;  // ln det C(n), <= 0
  double value = 0.0;   // n (1 + ln(pi sigma^2 / lambda)) + logdet / 2
};

// ln det C(n) as the sum of log pivots of an LDL^T factorization of the dense
// matrix. Throws SingularityError if any pivot is not positive.
double logdet_C_oracle(const Design& design, const OuParams& params);

// ln det C(n) = sum_i 2 ln(1 - pi_i^2), from the block LDU factorization with
// diagonal blocks I - e^{(A + A^T) d_i} = (1 - pi_i^2) I.
double logdet_C_closed(const Design& design, const OuParams& params);

// sum_i ln(1 - 2 pi_i^2). Only defined while every gap exceeds
// ln 2 / (2 lambda); NaN otherwise.
double logdet_C_printed(const Design& design, const OuParams& params);

// True if some gap is at or below ln 2 / (2 lambda), where the printed
// per-gap factor 1 - 2 pi^2 is no longer positive.
bool printed_form_undefined(const Design& design, const OuParams& params);

struct DeterminantArbitration {
  double oracle = 0.0;
  double squared_form = 0.0;  // sum 2 ln(1 - pi^2)
  double printed_form = 0.0;  // sum ln(1 - 2 pi^2), NaN when undefined
  bool squared_matches = false;
  bool printed_matches = false;
};

// Compares both closed forms against the factorization oracle at `tol`.
DeterminantArbitration arbitrate_determinant(const Design& design, const OuParams& params,
                                             double tol = 1e-10);

// Uses raw sigma; in normalized mode sigma^2 = 2 lambda, so the constant is
// n (1 + ln 2 pi).
EntropyValue entropy(const Design& design, const OuParams& params);

struct EntropyCheckOptions {
  std::size_t n_starts = 8;
  std::uint64_t seed = 1;
  double x_tol = 1e-11;
  std::size_t max_iters = 20000;
};

// Maximizes the entropy numerically over the gap simplex from random starts
// (never from the equispaced design) and returns the maximizer. Throws
// ConvergenceError if no start converges.
Design optimize_entropy_check(std::size_t n, const OuParams& params,
                              EntropyCheckOptions options = {});

}  // namespace oudesign
