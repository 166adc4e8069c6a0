#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "oudesign/covariance.hpp"
#include "oudesign/errors.hpp"

namespace oudesign {
namespace {

using testing::dense_corr;
using testing::dense_inverse;
using testing::random_design;

TEST(OuParams, RejectsNonPositiveLambdaAndSigma) {
  EXPECT_THROW(OuParams::normalized(0.0, 1.0), ArgumentError);
  EXPECT_THROW(OuParams::normalized(-1.0, 1.0), ArgumentError);
  EXPECT_THROW(OuParams::with_sigma(1.0, 1.0, 0.0), ArgumentError);
  EXPECT_THROW(OuParams::normalized(std::nan(""), 1.0), ArgumentError);
  EXPECT_NO_THROW(OuParams::normalized(1.0, -3.0));
}

TEST(OuParams, VarianceNormalization) {
  EXPECT_DOUBLE_EQ(OuParams::normalized(2.5, 1.0).variance(), 1.0);
  EXPECT_DOUBLE_EQ(OuParams::with_sigma(2.0, 1.0, 3.0).variance(), 9.0 / 4.0);
}

TEST(Design, ValidatesShape) {
  EXPECT_THROW(Design::from_points({0.0}), ArgumentError);
  EXPECT_THROW(Design::from_points({0.1, 1.0}), ArgumentError);
  EXPECT_THROW(Design::from_points({0.0, 0.9}), ArgumentError);
  EXPECT_THROW(Design::from_points({0.0, 0.6, 0.4, 1.0}), ArgumentError);
  EXPECT_THROW(Design::from_points({0.0, 0.5, 0.5, 1.0}), SingularityError);
  EXPECT_THROW(Design::from_points({0.0, 0.5, 0.5 + 1e-10, 1.0}), SingularityError);
  const auto d = Design::from_points({0.0, 0.25, 1.0 - 1e-13});
  EXPECT_EQ(d.points().back(), 1.0);
  EXPECT_NEAR(d.gap(0) + d.gap(1), 1.0, 1e-12);
}

TEST(Design, FromGapsAndEquispaced) {
  const std::vector<double> gaps{0.2, 0.3, 0.5};
  const auto d = Design::from_gaps(gaps);
  EXPECT_DOUBLE_EQ(d.point(2), 0.5);
  EXPECT_THROW(Design::from_gaps(std::vector<double>{0.2, 0.3}), ArgumentError);
  const auto e = Design::equispaced(5);
  for (double g : e.gaps()) EXPECT_NEAR(g, 0.25, 1e-15);
  EXPECT_THROW(Design::equispaced(1), ArgumentError);
}

TEST(RotationExp, IdentityAtZero) {
  const auto m = rotation_exp(OuParams::normalized(1.0, 4.0), 0.0);
  EXPECT_TRUE(m.isApprox(Mat2::Identity()));
}

TEST(RotationExp, ZeroFrequencyIsScaledIdentity) {
  const auto p = OuParams::normalized(1.7, 0.0);
  const auto m = rotation_exp(p, 0.8);
  EXPECT_TRUE(m.isApprox(std::exp(-1.7 * 0.8) * Mat2::Identity(), 1e-14));
}

TEST(RotationExp, HalfTurn) {
  const auto m = rotation_exp(OuParams::normalized(1.0, std::numbers::pi), 1.0);
  EXPECT_LT((m + std::exp(-1.0) * Mat2::Identity()).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(RotationExp, DeterminantAndNegativeTau) {
  const auto p = OuParams::normalized(0.7, -2.3);
  EXPECT_NEAR(rotation_exp(p, 0.9).determinant(), std::exp(-2.0 * 0.7 * 0.9), 1e-14);
  EXPECT_THROW(rotation_exp(p, -0.1), ArgumentError);
}

TEST(CovR, NormalizedValues) {
  EXPECT_TRUE(cov_R(OuParams::normalized(3.0, 2.0), 0.0).isApprox(Mat2::Identity()));
  const auto half = cov_R(OuParams::normalized(1.0, 0.0), std::log(2.0));
  EXPECT_LT((half - 0.5 * Mat2::Identity()).cwiseAbs().maxCoeff(), 1e-15);
  const auto p = OuParams::normalized(1.0, 4.0);
  EXPECT_TRUE(cov_R(p, 0.3).isApprox(rotation_exp(p, 0.3)));
  EXPECT_TRUE(cov_R(p, -0.3).isApprox(rotation_exp(p, 0.3).transpose()));
}

TEST(CovR, RawSigmaScale) {
  const auto p = OuParams::with_sigma(2.0, 1.0, 4.0);
  EXPECT_TRUE(cov_R(p, 0.0).isApprox(4.0 * Mat2::Identity()));
}

TEST(ComplexCov, MatchesDampedOscillation) {
  const auto p = OuParams::with_sigma(1.3, 2.1, 0.7);
  const double tau = 0.4;
  const double pref = 0.49 / 1.3 * std::exp(-1.3 * tau);
  const auto c = complex_cov(p, tau);
  EXPECT_NEAR(c.real(), pref * std::cos(2.1 * tau), 1e-14);
  EXPECT_NEAR(c.imag(), -pref * std::sin(2.1 * tau), 1e-14);
}

TEST(BuildC, TwoPointZeroFrequency) {
  const auto c = build_C(Design::equispaced(2), OuParams::normalized(1.0, 0.0));
  Eigen::Matrix4d expected = Eigen::Matrix4d::Identity();
  expected(0, 2) = expected(1, 3) = expected(2, 0) = expected(3, 1) = std::exp(-1.0);
  EXPECT_LT((c.dense() - expected).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(BuildC, TwoPointDeterminant) {
  const auto p = OuParams::normalized(0.8, 3.3);
  const auto c = build_C(Design::equispaced(2), p);
  const double pi = std::exp(-0.8);
  EXPECT_NEAR(c.dense().determinant(), std::pow(1.0 - pi * pi, 2), 1e-13);
}

TEST(BuildC, SymmetricPositiveDefiniteWithUnitDiagonal) {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> lam(0.2, 8.0), om(-8.0, 8.0);
  for (int trial = 0; trial < 50; ++trial) {
    const auto t = random_design(2 + trial % 11, rng, 0.005);
    const auto p = OuParams::normalized(lam(rng), om(rng));
    const auto c = build_C(Design::from_points(t), p).dense();
    EXPECT_LT((c - c.transpose()).cwiseAbs().maxCoeff(), 1e-15);
    EXPECT_LT((c - dense_corr(t, p.lambda(), p.omega())).cwiseAbs().maxCoeff(), 1e-14);
    Eigen::LDLT<Eigen::MatrixXd> ldlt(c);
    EXPECT_GT(ldlt.vectorD().minCoeff(), 0.0);
    for (Eigen::Index i = 0; i < c.rows(); ++i) EXPECT_DOUBLE_EQ(c(i, i), 1.0);
  }
}

TEST(BuildC, MirroredOmegaTransposesOffDiagonalBlocks) {
  const auto d = Design::from_points({0.0, 0.2, 0.7, 1.0});
  const auto p = OuParams::normalized(1.5, 2.5);
  const auto c = build_C(d, p);
  const auto m = build_C(d, p.mirrored());
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      EXPECT_TRUE(m.block(i, j).isApprox(c.block(i, j).transpose()));
}

TEST(BuildCInv, TwoPointClosedForm) {
  const auto p = OuParams::normalized(1.2, -0.7);
  const auto inv = build_C_inv(Design::equispaced(2), p);
  const double u = 1.0 / (1.0 - std::exp(-2.4));
  const Mat2 e = rotation_exp(p, 1.0);
  EXPECT_TRUE(inv.block(0, 0).isApprox(u * Mat2::Identity()));
  EXPECT_TRUE(inv.block(1, 1).isApprox(u * Mat2::Identity()));
  EXPECT_TRUE(inv.block(0, 1).isApprox(-u * e.transpose()));
  EXPECT_TRUE(inv.block(1, 0).isApprox(-u * e));
}

TEST(BuildCInv, ExactInverseAndTridiagonal) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> lam(0.2, 8.0), om(-8.0, 8.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial) % 11;
    const auto d = Design::from_points(random_design(n, rng, 0.01));
    const auto p = OuParams::normalized(lam(rng), om(rng));
    const auto c = build_C(d, p).dense();
    const auto inv = build_C_inv(d, p);
    const Eigen::MatrixXd prod = c * inv.dense();
    const Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(c.rows(), c.cols());
    EXPECT_LT((prod - eye).cwiseAbs().rowwise().sum().maxCoeff(), 1e-10);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i > j + 1 || j > i + 1) EXPECT_TRUE((inv.block(i, j).array() == 0.0).all());
  }
}

TEST(BuildCInv, MatchesDenseLuFiveBlocks) {
  const auto d = Design::from_points({0.0, 0.13, 0.41, 0.77, 1.0});
  const auto p = OuParams::normalized(2.4522, -4.1274);
  const Eigen::MatrixXd expected = dense_inverse(dense_corr({0.0, 0.13, 0.41, 0.77, 1.0},
                                                            p.lambda(), p.omega()));
  EXPECT_LT((build_C_inv(d, p).dense() - expected).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(CrossQ, BlocksAndDomain) {
  const auto d = Design::from_points({0.0, 0.4, 1.0});
  const auto p = OuParams::normalized(1.1, 3.0);
  const auto q = cross_Q(0.4, d, p);
  EXPECT_TRUE((q.block<2, 2>(0, 2).isApprox(Mat2::Identity())));
  const auto qm = cross_Q(0.65, d, p.mirrored());
  const auto qp = cross_Q(0.65, d, p);
  for (Eigen::Index c = 0; c < 6; ++c) {
    EXPECT_NEAR(qm(0, c), (c % 2 == 0) ? qp(0, c) : -qp(0, c), 1e-15);
    EXPECT_NEAR(qm(1, c), (c % 2 == 1) ? qp(1, c) : -qp(1, c), 1e-15);
  }
  const double x = 0.65, tau = x - 1.0;
  const double e = std::exp(-1.1 * std::abs(tau));
  EXPECT_NEAR(qp(0, 4), e * std::cos(3.0 * tau), 1e-15);
  EXPECT_NEAR(qp(0, 5), e * std::sin(3.0 * tau), 1e-15);
  EXPECT_NEAR(qp(1, 4), -e * std::sin(3.0 * tau), 1e-15);
  EXPECT_THROW(cross_Q(1.2, d, p), ArgumentError);
  EXPECT_THROW(cross_Q(-0.1, d, p), ArgumentError);
  EXPECT_NO_THROW(cross_Q(1.2, d, p, {.allow_extrapolation = true}));
}

}  // namespace
}  // namespace oudesign
