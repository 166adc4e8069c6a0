#include "oudesign/optimize.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <limits>
#include <optional>
#include <random>
#include <string>

#include "oudesign/entropy.hpp"
#include "oudesign/errors.hpp"
#include "oudesign/imspe.hpp"
#include "oudesign/simplex.hpp"

namespace oudesign {

std::string_view to_string(Criterion criterion) {
  return criterion == Criterion::kImspe ? "imspe" : "entropy";
}

Criterion parse_criterion(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "imspe") return Criterion::kImspe;
  if (lower == "entropy") return Criterion::kEntropy;
  throw ArgumentError("unknown criterion '" + std::string(text) + "'");
}

void OptimizerConfig::validate() const {
  if (n_starts < 1) throw ArgumentError("n_starts must be >= 1");
  if (max_iters < 1) throw ArgumentError("max_iters must be >= 1");
  if (!(x_tol > 0.0) || !(f_tol > 0.0)) throw ArgumentError("tolerances must be positive");
}

Design equispaced(std::size_t n) { return Design::equispaced(n); }

double criterion_objective(const Design& design, const OuParams& params, Criterion criterion) {
  if (criterion == Criterion::kImspe) return imspe_closed(design, params).value;
  return -entropy(design, params).value;
}

OptimizationResult optimize_design(std::size_t n, const OuParams& params,
                                   const OptimizerConfig& config) {
  config.validate();
  if (n < 2) throw ArgumentError("optimize_design requires n >= 2");

  auto report_value = [&](const Design& design) {
    const double f = criterion_objective(design, params, config.criterion);
    return config.criterion == Criterion::kImspe ? f : -f;
  };

  if (n == 2) {
    Design design = Design::equispaced(2);
    const double value = report_value(design);
    StartTrace only{0, {1.0}, {1.0}, value, 0, true};
    return OptimizationResult{design, value, {only}};
  }

  const std::size_t dim = n - 2;
  auto objective = [&](std::span<const double> logits) {
    return criterion_objective(Design::from_gaps(gaps_from_logits(logits)), params,
                               config.criterion);
  };
  const SimplexOptions simplex{.step = 0.5, .x_tol = config.x_tol,
                               .max_iters = config.max_iters, .restarts = 1};

  std::vector<StartTrace> trace;
  trace.reserve(config.n_starts);
  for (std::size_t s = 0; s < config.n_starts; ++s) {
    std::vector<double> start(dim, 0.0);
    if (s > 0) {
      std::seed_seq seq{config.seed, static_cast<std::uint64_t>(s)};
      std::mt19937_64 rng(seq);
      std::normal_distribution<double> normal(0.0, 1.0);
      for (auto& u : start) u = normal(rng);
    }
    StartTrace entry;
    entry.index = s;
    entry.initial_gaps = gaps_from_logits(start);
    const SimplexResult result = nelder_mead(objective, std::move(start), simplex);
    entry.final_gaps = gaps_from_logits(result.x);
    entry.iterations = result.iterations;
    entry.converged = result.converged && std::isfinite(result.value);
    entry.value = config.criterion == Criterion::kImspe ? result.value : -result.value;
    trace.push_back(std::move(entry));
  }

  // Best objective (minimization sense) among converged starts.
  auto objective_of = [&](const StartTrace& t) {
    return config.criterion == Criterion::kImspe ? t.value : -t.value;
  };
  std::optional<double> best_objective;
  for (const auto& t : trace) {
    if (t.converged && (!best_objective || objective_of(t) < *best_objective)) {
      best_objective = objective_of(t);
    }
  }
  if (!best_objective) {
    const auto best = std::min_element(trace.begin(), trace.end(),
        [&](const StartTrace& a, const StartTrace& b) { return objective_of(a) < objective_of(b); });
    throw ConvergenceError("optimize_design: no start converged", best->value, best->final_gaps);
  }

  const StartTrace* chosen = nullptr;
  double chosen_max_gap = std::numeric_limits<double>::infinity();
  for (const auto& t : trace) {
    if (!t.converged || objective_of(t) > *best_objective + config.f_tol) continue;
    const double max_gap = *std::max_element(t.final_gaps.begin(), t.final_gaps.end());
    if (max_gap < chosen_max_gap) {
      chosen = &t;
      chosen_max_gap = max_gap;
    }
  }
  Design design = Design::from_gaps(chosen->final_gaps);
  return OptimizationResult{design, chosen->value, std::move(trace)};
}

EfficiencyReport efficiency_report(std::size_t n, const OuParams& params,
                                   const OptimizerConfig& config) {
  OptimizerConfig imspe_config = config;
  imspe_config.criterion = Criterion::kImspe;
  const OptimizationResult best = optimize_design(n, params, imspe_config);
  EfficiencyReport report{n, params, 0.0, 0.0, {}, 0.0};
  report.imspe_equispaced = imspe_closed(Design::equispaced(n), params).value;
  report.imspe_optimal = std::min(best.value, report.imspe_equispaced);
  const auto points = best.value <= report.imspe_equispaced
                          ? best.design.points()
                          : Design::equispaced(n).points();
  report.optimal_design.assign(points.begin(), points.end());
  report.relative_efficiency_pct = 100.0 * report.imspe_optimal / report.imspe_equispaced;
  return report;
}

std::vector<EfficiencyReport> efficiency_table(const std::vector<OuParams>& param_sets,
                                               const std::vector<std::size_t>& n_values,
                                               const OptimizerConfig& config) {
  if (param_sets.empty() || n_values.empty()) {
    throw ArgumentError("efficiency_table needs at least one parameter set and one n");
  }
  std::vector<EfficiencyReport> out;
  out.reserve(param_sets.size() * n_values.size());
  for (const auto& params : param_sets) {
    for (std::size_t n : n_values) out.push_back(efficiency_report(n, params, config));
  }
  return out;
}

const std::vector<ReferenceCell>& reference_efficiency_cells() {
  static const std::vector<ReferenceCell> cells = {
      {2017, 2.4522, -4.1274, 3, 11416, 11416, 100.0},
      {2017, 2.4522, -4.1274, 4, 14724, 15470, 95.18},
      {2017, 2.4522, -4.1274, 5, 14152, 20226, 69.97},
      {2016, 4.9968, -0.3561, 3, 33633, 33633, 100.0},
      {2016, 4.9968, -0.3561, 4, 25472, 25473, 99.99},
      {2016, 4.9968, -0.3561, 5, 16305, 16320, 99.91},
      {2015, 4.9366, -5.7767, 3, 18388, 18388, 100.0},
      {2015, 4.9366, -5.7767, 4, 16959, 17977, 94.34},
      {2015, 4.9366, -5.7767, 5, 11785, 11785, 89.15},
  };
  return cells;
}

}  // namespace oudesign
