#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "oudesign/design.hpp"
#include "oudesign/params.hpp"

namespace oudesign {

enum class Criterion { kImspe, kEntropy };

std::string_view to_string(Criterion criterion);
// Accepts "imspe" or "entropy" (case-insensitive); throws ArgumentError otherwise.
Criterion parse_criterion(std::string_view text);

struct OptimizerConfig {
  std::size_t n_starts = 16;
  std::size_t max_iters = 20000;
  double x_tol = 1e-10;
  double f_tol = 1e-12;
  std::uint64_t seed = 42;
  Criterion criterion = Criterion::kImspe;

  void validate() const;
};

struct StartTrace {
  std::size_t index = 0;
  std::vector<double> initial_gaps;
  std::vector<double> final_gaps;
  double value = 0.0;  // criterion value at the end of this start
  std::size_t iterations = 0;
  bool converged = false;
};

struct OptimizationResult {
  Design design;
  // IMSPE for Criterion::kImspe, Ent(Z) for Criterion::kEntropy.
  double value;
  std::vector<StartTrace> trace;
};

Design equispaced(std::size_t n);

// Criterion value to minimize: IMSPE, or -Ent(Z) for the entropy criterion.
double criterion_objective(const Design& design, const OuParams& params, Criterion criterion);

// Multistart Nelder-Mead over the gap simplex. Start 0 is the equispaced
// design, the others draw logits from N(0, 1) with a generator seeded by
// (seed, start index). Among converged starts within f_tol of the best, the
// one with the smallest maximum gap wins. n = 2 returns {0, 1}. Throws
// ConvergenceError (with the best design seen) if no start converges.
OptimizationResult optimize_design(std::size_t n, const OuParams& params,
                                   const OptimizerConfig& config = {});

struct EfficiencyReport {
  std::size_t n = 0;
  OuParams params;
  double imspe_optimal = 0.0;
  double imspe_equispaced = 0.0;
  std::vector<double> optimal_design;
  // 100 * imspe_optimal / imspe_equispaced
  double relative_efficiency_pct = 0.0;
};

EfficiencyReport efficiency_report(std::size_t n, const OuParams& params,
                                   const OptimizerConfig& config = {});

// One report per (params, n), params-major.
std::vector<EfficiencyReport> efficiency_table(const std::vector<OuParams>& param_sets,
                                               const std::vector<std::size_t>& n_values,
                                               const OptimizerConfig& config = {});

// Printed reference values of the relative-efficiency study on polar-motion
// parameter estimates for 2015-2017.
struct ReferenceCell {
  int year;
  double lambda;
  double omega;
  std::size_t n;
  double imspe_optimal;
  double imspe_equispaced;
  double relative_efficiency_pct;
};

const std::vector<ReferenceCell>& reference_efficiency_cells();

}  // namespace oudesign
