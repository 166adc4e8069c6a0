#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "oudesign/entropy.hpp"
#include "oudesign/errors.hpp"

namespace oudesign {
namespace {

using testing::dense_corr;
using testing::random_design;

double eigen_logdet(const std::vector<double>& t, double lambda, double omega) {
  const Eigen::VectorXd ev =
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(dense_corr(t, lambda, omega)).eigenvalues();
  return ev.array().log().sum();
}

TEST(Logdet, TwoPoints) {
  const double lambda = 1.3;
  const double pi = std::exp(-lambda);
  const auto p = OuParams::normalized(lambda, 2.0);
  EXPECT_NEAR(logdet_C_closed(Design::equispaced(2), p), 2.0 * std::log(1.0 - pi * pi), 1e-14);
  EXPECT_NEAR(logdet_C_oracle(Design::equispaced(2), p), 2.0 * std::log(1.0 - pi * pi), 1e-12);
}

TEST(Logdet, ClosedFormMatchesEigenvaluesAndFactorization) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lam(0.3, 6.0), om(-10.0, 10.0);
  for (int trial = 0; trial < 200; ++trial) {
    const auto t = random_design(2 + trial % 9, rng);
    const auto p = OuParams::normalized(lam(rng), om(rng));
    const auto d = Design::from_points(t);
    const double closed = logdet_C_closed(d, p);
    EXPECT_NEAR(closed, logdet_C_oracle(d, p), 1e-10);
    EXPECT_NEAR(closed, eigen_logdet(t, p.lambda(), p.omega()), 1e-9);
  }
}

TEST(Logdet, IndependentOfOmega) {
  const auto d = Design::from_points({0.0, 0.15, 0.6, 1.0});
  const double base = logdet_C_oracle(d, OuParams::normalized(2.0, 0.0));
  for (double omega : {-3.0, 3.0, 11.0}) {
    EXPECT_NEAR(logdet_C_oracle(d, OuParams::normalized(2.0, omega)), base, 1e-11);
    EXPECT_EQ(logdet_C_closed(d, OuParams::normalized(2.0, omega)),
              logdet_C_closed(d, OuParams::normalized(2.0, 0.0)));
  }
}

TEST(Logdet, InvariantUnderGapPermutation) {
  const auto p = OuParams::normalized(1.7, 0.4);
  std::vector<double> gaps{0.1, 0.2, 0.3, 0.4};
  const double base = logdet_C_oracle(Design::from_gaps(gaps), p);
  std::sort(gaps.begin(), gaps.end());
  do {
    EXPECT_NEAR(logdet_C_oracle(Design::from_gaps(gaps), p), base, 1e-11);
  } while (std::next_permutation(gaps.begin(), gaps.end()));
}

TEST(Arbitration, SquaredFormMatchesPrintedDoesNot) {
  const auto p = OuParams::normalized(2.0, 1.0);
  const auto wide = arbitrate_determinant(Design::equispaced(3), p);
  EXPECT_TRUE(wide.squared_matches);
  EXPECT_FALSE(wide.printed_matches);
  EXPECT_NEAR(wide.squared_form, wide.oracle, 1e-10);
  EXPECT_TRUE(std::isfinite(wide.printed_form));

  const auto narrow_design = Design::equispaced(8);  // gaps 1/7 < ln 2 / 4
  EXPECT_TRUE(printed_form_undefined(narrow_design, p));
  EXPECT_FALSE(printed_form_undefined(Design::equispaced(3), p));
  const auto narrow = arbitrate_determinant(narrow_design, p);
  EXPECT_TRUE(std::isnan(narrow.printed_form));
  EXPECT_FALSE(narrow.printed_matches);
  EXPECT_TRUE(narrow.squared_matches);
}

TEST(Entropy, ConstantTermAndSigma) {
  const auto d = Design::from_points({0.0, 0.4, 1.0});
  const auto p = OuParams::normalized(1.5, 2.0);
  const auto e = entropy(d, p);
  EXPECT_NEAR(e.value, 3.0 * (1.0 + std::log(2.0 * std::numbers::pi)) + 0.5 * e.logdet, 1e-13);
  // sigma only shifts the constant
  const auto e2 = entropy(d, OuParams::with_sigma(1.5, 2.0, 3.0));
  EXPECT_EQ(e2.logdet, e.logdet);
  EXPECT_NEAR(e2.value - e.value, 3.0 * std::log(9.0 / 3.0), 1e-12);
}

TEST(Entropy, EquispacedDominatesRandomDesigns) {
  std::mt19937_64 rng(9);
  for (double lambda : {0.5, 2.0, 5.0})
    for (std::size_t n : {3u, 5u, 8u}) {
      const auto p = OuParams::normalized(lambda, 1.0);
      const double eq = entropy(Design::equispaced(n), p).value;
      for (int trial = 0; trial < 50; ++trial)
        EXPECT_LE(entropy(Design::from_points(random_design(n, rng)), p).value, eq + 1e-12);
    }
}

TEST(Entropy, ConcaveAlongGapDirections) {
  // Second difference of logdet along d_i += h, d_j -= h is negative.
  const auto p = OuParams::normalized(2.0, 0.0);
  std::mt19937_64 rng(10);
  std::uniform_real_distribution<double> u(0.05, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> g{u(rng), u(rng), u(rng), u(rng)};
    double s = 0;
    for (double x : g) s += x;
    for (double& x : g) x /= s;
    const double h = 1e-3;
    auto shifted = [&](double k) {
      auto gg = g;
      gg[0] += k * h;
      gg[2] -= k * h;
      return logdet_C_closed(Design::from_gaps(gg), p);
    };
    EXPECT_LT(shifted(1) - 2 * shifted(0) + shifted(-1), 0.0);
  }
}

TEST(Entropy, NumericalMaximizerIsEquispaced) {
  for (std::size_t n : {3u, 4u, 6u}) {
    const auto best = optimize_entropy_check(n, OuParams::normalized(2.5, -1.0));
    const auto eq = Design::equispaced(n);
    for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(best.point(i), eq.point(i), 1e-6);
  }
  EXPECT_THROW(optimize_entropy_check(2, OuParams::normalized(1.0, 0.0)), ArgumentError);
}

}  // namespace
}  // namespace oudesign
