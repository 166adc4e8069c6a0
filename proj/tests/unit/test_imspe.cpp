#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "oudesign/covariance.hpp"
#include "oudesign/errors.hpp"
#include "oudesign/imspe.hpp"
#include "oudesign/quadrature.hpp"

namespace oudesign {
namespace {

using testing::dense_corr;
using testing::dense_imspe;
using testing::dense_inverse;
using testing::gauss_panels;
using testing::random_design;
using testing::scalar_imspe;
using testing::stacked_h;

TEST(GScalar, BasicValues) {
  const auto p = OuParams::normalized(1.0, 4.0);
  EXPECT_EQ(g_scalar(0.0, p), 0.0);
  const double expected = (1.0 - 2.0 * std::exp(-0.5) * std::cos(2.0) + std::exp(-1.0)) /
                          (1.0 - std::exp(-1.0));
  EXPECT_NEAR(g_scalar(0.5, p), expected, 1e-15);
  EXPECT_NEAR(g_scalar(60.0, p), 1.0, 1e-12);
  EXPECT_THROW(g_scalar(-0.1, p), ArgumentError);
}

TEST(GScalar, ZeroFrequencyIsTanh) {
  for (double lambda : {0.3, 1.0, 4.0}) {
    const auto p = OuParams::normalized(lambda, 0.0);
    for (double d : {0.01, 0.2, 0.9}) EXPECT_NEAR(g_scalar(d, p), std::tanh(lambda * d / 2), 1e-14);
  }
}

TEST(GScalar, NonNegative) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> lam(0.1, 10.0), om(-20.0, 20.0), dd(0.0, 2.0);
  for (int i = 0; i < 1000; ++i) EXPECT_GE(g_scalar(dd(rng), OuParams::normalized(lam(rng), om(rng))), 0.0);
}

TEST(FimG, TwoPointAndEquispaced) {
  EXPECT_NEAR(fim_G(Design::equispaced(2), OuParams::normalized(1.0, 0.0)), 1.0 + std::tanh(0.5),
              1e-15);
  const auto p = OuParams::normalized(2.2, -1.3);
  for (std::size_t n = 2; n < 9; ++n) {
    EXPECT_NEAR(fim_G(Design::equispaced(n), p),
                1.0 + static_cast<double>(n - 1) * g_scalar(1.0 / static_cast<double>(n - 1), p),
                1e-13);
  }
}

TEST(FimG, MatchesDenseFisherInformation) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = random_design(5, rng);
    const double lambda = trial == 0 ? 4.9366 : 0.5 + 0.2 * trial;
    const double omega = trial == 0 ? -5.7767 : 3.0 - 0.4 * trial;
    const Eigen::MatrixXd h = stacked_h(5);
    const Eigen::Matrix2d fim = h * dense_inverse(dense_corr(t, lambda, omega)) * h.transpose();
    const double g = fim_G(Design::from_points(t), OuParams::normalized(lambda, omega));
    EXPECT_NEAR(g, 0.5 * fim.trace(), 1e-10);
    EXPECT_NEAR(fim(0, 1), 0.0, 1e-10);
    EXPECT_NEAR(fim(0, 0), fim(1, 1), 1e-10);
  }
}

TEST(RhoVee, ClosedFormSpecialCases) {
  const auto d = Design::from_points({0.0, 0.3, 1.0});
  EXPECT_NEAR(rho(0, 0, d, OuParams::normalized(1.0, 2.0)), 0.5 * (1.0 - std::exp(-2.0)), 1e-15);
  const double lambda = 1.7;
  const auto p0 = OuParams::normalized(lambda, 0.0);
  for (std::size_t i = 0; i < 3; ++i) {
    const double ti = d.point(i);
    const double expected = (2.0 - std::exp(-lambda * ti) - std::exp(-lambda * (1.0 - ti))) / lambda;
    for (std::size_t j = 0; j < 3; ++j) EXPECT_NEAR(vee(i, j, d, p0), expected, 1e-14);
  }
  EXPECT_THROW(rho(3, 0, d, p0), ArgumentError);
  EXPECT_THROW(vee(0, 5, d, p0), ArgumentError);
}

TEST(RhoVee, MatchQuadratureOfDefiningIntegrals) {
  std::mt19937_64 rng(44);
  const double lambda = 2.4522, omega = -4.1274;
  const auto p = OuParams::normalized(lambda, omega);
  for (int trial = 0; trial < 10; ++trial) {
    const auto t = random_design(6, rng);
    const auto d = Design::from_points(t);
    const auto table = RhoVeeTable::build(d, p);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) {
        const double r = gauss_panels(
            [&](double x) { return std::exp(-lambda * (std::abs(x - t[i]) + std::abs(x - t[j]))); },
            t);
        const double v = gauss_panels(
            [&](double x) { return std::exp(-lambda * std::abs(x - t[i])) * std::cos(omega * (x - t[j])); },
            t);
        EXPECT_NEAR(table.rho(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)), r, 1e-9);
        EXPECT_NEAR(table.vee(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)), v, 1e-9);
        EXPECT_NEAR(rho(i, j, d, p), r, 1e-9);
        EXPECT_NEAR(vee(i, j, d, p), v, 1e-9);
      }
  }
}

// Values computed with an independent dense bordered-matrix quadrature.
TEST(ImspeClosed, FrozenReferenceValues) {
  EXPECT_NEAR(imspe_closed(Design::equispaced(2), OuParams::normalized(1.0, 4.0)).value,
              1.3057260998741291, 1e-12);
  EXPECT_NEAR(imspe_closed(Design::equispaced(3), OuParams::normalized(1.0, 4.0)).value,
              0.3626026995297057, 1e-12);
  EXPECT_NEAR(imspe_closed(Design::from_points({0.0, 0.3, 0.7, 1.0}),
                           OuParams::normalized(2.4522, -4.1274)).value,
              0.5519390818985294, 1e-12);
  EXPECT_NEAR(imspe_closed(Design::from_points({0.0, 0.1, 0.35, 0.6, 1.0}),
                           OuParams::normalized(4.9366, -5.7767)).value,
              0.8954335271998539, 1e-12);
  EXPECT_NEAR(imspe_closed(Design::equispaced(4), OuParams::normalized(4.9968, -0.3561)).value,
              0.9733900444094529, 1e-12);
}

TEST(ImspeClosed, BreakdownIsConsistent) {
  const auto b = imspe_closed(Design::from_points({0.0, 0.2, 0.55, 1.0}),
                              OuParams::normalized(1.3, 2.2));
  ASSERT_EQ(b.g_values.size(), 3u);
  EXPECT_GE(b.G, 1.0);
  EXPECT_NEAR(b.B_n, b.b_terms[0] + b.b_terms[1] + b.b_terms[2] + b.b_terms[3] + b.b_terms[4],
              1e-15);
  EXPECT_NEAR(b.value, 2.0 * (1.0 - b.A_n + b.B_n / b.G), 1e-15);
  EXPECT_GT(b.value, 0.0);
}

TEST(ImspeClosed, MatchesDenseQuadratureOracle) {
  std::mt19937_64 rng(55);
  std::uniform_real_distribution<double> lam(0.5, 5.0), om(-6.0, 6.0);
  for (int trial = 0; trial < 60; ++trial) {
    const auto t = random_design(2 + trial % 7, rng);
    const auto p = OuParams::normalized(lam(rng), om(rng));
    const double closed = imspe_closed(Design::from_points(t), p).value;
    EXPECT_NEAR(closed, dense_imspe(t, p.lambda(), p.omega()), 1e-9 * closed);
  }
}

TEST(ImspeClosed, ZeroFrequencyIsTwiceScalarModel) {
  std::mt19937_64 rng(66);
  std::uniform_real_distribution<double> lam(0.5, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    const auto t = random_design(2 + trial % 7, rng);
    const double lambda = lam(rng);
    const double closed = imspe_closed(Design::from_points(t), OuParams::normalized(lambda, 0.0)).value;
    EXPECT_NEAR(closed, 2.0 * scalar_imspe(t, lambda), 1e-9 * closed);
  }
}

TEST(ImspeClosed, OmegaSignInvariance) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 50; ++trial) {
    const auto d = Design::from_points(random_design(2 + trial % 7, rng));
    const auto p = OuParams::normalized(0.5 + 0.1 * trial, -6.0 + 0.24 * trial);
    EXPECT_EQ(imspe_closed(d, p).value, imspe_closed(d, p.mirrored()).value);
  }
}

TEST(ImspeClosed, ThreePointMinimumAtHalf) {
  const auto p = OuParams::normalized(1.0, 4.0);
  double best_d = 0.0, best = 1e300;
  for (int k = 1; k < 10000; ++k) {
    const double d = k * 1e-4;
    const double v = imspe_closed(Design::from_points({0.0, d, 1.0}), p).value;
    if (v < best) {
      best = v;
      best_d = d;
    }
  }
  EXPECT_NEAR(best_d, 0.5, 1e-4);
}

TEST(ImspeClosed, FourPointNonEquidistanceWitness) {
  // Design found by a 1/60 grid search for these parameters.
  const auto p = OuParams::normalized(0.5, 20.0);
  const double eq = imspe_closed(Design::equispaced(4), p).value;
  const double other = imspe_closed(Design::from_points({0.0, 8.0 / 60, 34.0 / 60, 1.0}), p).value;
  EXPECT_NEAR(eq, 1.6505078089374865, 1e-10);
  EXPECT_NEAR(other, 0.18335738796655268, 1e-10);
  EXPECT_LT(other, 0.99 * eq);
}

TEST(ImspeQuadrature, MonotoneRefinement) {
  std::mt19937_64 rng(88);
  std::uniform_real_distribution<double> u(0.0, 1.0), lam(0.5, 5.0), om(-6.0, 6.0);
  for (int trial = 0; trial < 40; ++trial) {
    auto t = random_design(2 + trial % 6, rng);
    const auto p = OuParams::normalized(lam(rng), om(rng));
    const double before = imspe_quadrature(Design::from_points(t), p).value;
    double x;
    do {
      x = u(rng);
    } while (std::any_of(t.begin(), t.end(), [&](double ti) { return std::abs(ti - x) < 1e-3; }));
    t.push_back(x);
    std::sort(t.begin(), t.end());
    const double after = imspe_quadrature(Design::from_points(t), p).value;
    EXPECT_LE(after, before + 1e-9);
  }
}

}  // namespace
}  // namespace oudesign
