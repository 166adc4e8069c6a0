#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace oudesign {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Invalid input: out-of-range parameter, malformed design, dimension mismatch.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// Coincident design points or a non positive-definite system.
class SingularityError : public Error {
 public:
  using Error::Error;
};

// An iterative procedure stopped before meeting its tolerance. Carries the
// best value (and, for design searches, the best design) seen so far.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double best_estimate,
                   std::optional<std::vector<double>> best_design = std::nullopt);

  double best_estimate() const noexcept { return best_estimate_; }
  const std::optional<std::vector<double>>& best_design() const noexcept {
    return best_design_;
  }

 private:
  double best_estimate_;
  std::optional<std::vector<double>> best_design_;
};

// Unparseable or non-monotone input files.
class FormatError : public Error {
 public:
  using Error::Error;
};

// Rank-deficient regression.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

// Data incompatible with a stationary model (e.g. a non-contractive fit).
class EstimationError : public Error {
 public:
  using Error::Error;
};

}  // namespace oudesign
