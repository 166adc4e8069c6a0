#include "oudesign/errors.hpp"

#include <utility>

namespace oudesign {

ConvergenceError::ConvergenceError(const std::string& what, double best_estimate,
                                   std::optional<std::vector<double>> best_design)
    : Error(what), best_estimate_(best_estimate), best_design_(std::move(best_design)) {}

}  // namespace oudesign
