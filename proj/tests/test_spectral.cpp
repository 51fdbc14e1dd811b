#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "erconn/error.hpp"
#include "erconn/spectral.hpp"
#include "support/jacobi.hpp"

namespace erconn {
namespace {

TEST(SymmetricEigenvalues, ZeroMatrix) {
  const Spectrum s = symmetric_eigenvalues(Eigen::MatrixXd::Zero(3, 3));
  for (double v : s.values()) EXPECT_EQ(v, 0.0);
}

TEST(SymmetricEigenvalues, CompleteGraphSpectrum) {
  for (int n : {2, 3, 7, 20, 64}) {
    const Spectrum s = symmetric_eigenvalues(laplacian(GraphSample::complete(n)).entries());
    EXPECT_NEAR(s[0], 0.0, 1e-9);
    for (int i = 1; i < n; ++i) EXPECT_NEAR(s[i], n, 1e-9 * n);
  }
}

TEST(SymmetricEigenvalues, PathGraphP4) {
  const Spectrum s = symmetric_eigenvalues(laplacian(GraphSample::path(4)).entries());
  // 2 (1 - cos(k pi / 4)), k = 0..3
  for (int k = 0; k < 4; ++k)
    EXPECT_NEAR(s[k], 2.0 * (1.0 - std::cos(k * std::numbers::pi / 4.0)), 1e-12);
  EXPECT_NEAR(s.lambda2(), 2.0 - std::sqrt(2.0), 1e-12);
  EXPECT_NEAR(s.lambda2(), 0.585786, 1e-6);
}

TEST(SymmetricEigenvalues, RejectsNonSymmetricAndEmpty) {
  Eigen::MatrixXd m = Eigen::MatrixXd::Identity(3, 3);
  m(0, 2) = 1e-9;
  EXPECT_THROW(symmetric_eigenvalues(m), DomainError);
  EXPECT_THROW(symmetric_eigenvalues(Eigen::MatrixXd(0, 0)), DomainError);
  EXPECT_THROW(symmetric_eigenvalues(Eigen::MatrixXd::Zero(2, 3)), DomainError);
}

TEST(SymmetricEigenvalues, AgreesWithJacobiOnRandomSymmetricMatrices) {
  Xoshiro256 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 40);
    Eigen::MatrixXd a(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) a(i, j) = a(j, i) = 10.0 * (rng.uniform() - 0.5);
    const Spectrum s = symmetric_eigenvalues(a);
    const auto ref = testing::jacobi_eigenvalues(a);
    const double scale = std::max(1.0, a.norm());
    for (int i = 0; i < n; ++i) EXPECT_NEAR(s[i], ref[i], 1e-9 * scale);
    EXPECT_NEAR(s.sum(), a.trace(), 1e-9 * scale);
  }
}

TEST(SymmetricEigenvalues, LaplacianSpectraAgreeWithJacobiAndTrace) {
  Xoshiro256 rng(6);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 50);
    const GraphSample g = sample_graph(ModelParams(n, 0.05 + 0.9 * rng.uniform()), rng());
    const Eigen::MatrixXd l = laplacian(g).entries();
    const Spectrum s = symmetric_eigenvalues(l);
    const auto ref = testing::jacobi_eigenvalues(l);
    for (int i = 0; i < n; ++i) EXPECT_NEAR(s[i], ref[i], 1e-9 * std::max(1.0, std::abs(ref[i])));
    EXPECT_NEAR(s.sum(), l.trace(), 1e-9 * std::max(1.0, l.trace()));
    EXPECT_NEAR(s.smallest(), 0.0, kZeroTolerance);
    for (double v : s.values()) EXPECT_GE(v, -kZeroTolerance);
  }
}

TEST(Lambda2, Examples) {
  EXPECT_NEAR(lambda2(laplacian(GraphSample::complete(50))), 50.0, 1e-9);
  const GraphSample two_parts(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}});
  EXPECT_NEAR(lambda2(laplacian(two_parts)), 0.0, kZeroTolerance);
  EXPECT_FALSE(is_connected_spectral(lambda2(laplacian(two_parts))));
  const double p50 = lambda2(laplacian(GraphSample::path(50)));
  EXPECT_NEAR(p50, 2.0 * (1.0 - std::cos(std::numbers::pi / 50.0)), 1e-9);
  EXPECT_NEAR(p50, 0.0039465431, 1e-7);
}

TEST(Lambda2, CapabilityCeiling) {
  EXPECT_THROW(lambda2(laplacian(GraphSample::empty(kMaxSpectralNodes + 1))), CapabilityError);
}

TEST(StructuredMatrixEigs, Examples) {
  const int n = 7;
  const double p = 0.3;
  // p (nI - J): alpha = p(n-1), beta = -p
  const StructuredEigs lap = structured_matrix_eigs(p * (n - 1), -p, n);
  EXPECT_NEAR(lap.simple_eig, 0.0, 1e-15);
  EXPECT_NEAR(lap.repeated_eig, n * p, 1e-15);

  const StructuredEigs rank_one = structured_matrix_eigs(2.5, 2.5, 4);
  EXPECT_DOUBLE_EQ(rank_one.simple_eig, 10.0);
  EXPECT_DOUBLE_EQ(rank_one.repeated_eig, 0.0);

  const StructuredEigs e = structured_matrix_eigs(3.0, 1.0, 4);
  EXPECT_DOUBLE_EQ(e.simple_eig, 6.0);
  EXPECT_DOUBLE_EQ(e.repeated_eig, 2.0);
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(4, 4, 1.0);
  m.diagonal().setConstant(3.0);
  const Spectrum s = symmetric_eigenvalues(m);
  EXPECT_NEAR(s[0], 2.0, 1e-12);
  EXPECT_NEAR(s[1], 2.0, 1e-12);
  EXPECT_NEAR(s[2], 2.0, 1e-12);
  EXPECT_NEAR(s[3], 6.0, 1e-12);

  EXPECT_THROW(structured_matrix_eigs(1.0, 1.0, 1), DomainError);
}

TEST(LineGraphLambdaMin, Examples) {
  EXPECT_NEAR(line_graph_lambda_min(2), 2.0, 1e-15);
  EXPECT_NEAR(line_graph_lambda_min(4), 2.0 - std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(line_graph_lambda_min(50), 0.0039465431, 1e-7);
  EXPECT_THROW(line_graph_lambda_min(1), DomainError);
}

TEST(LineGraphLambdaMin, MatchesPathSpectrumUpTo200) {
  for (int n = 2; n <= 200; ++n) {
    EXPECT_NEAR(lambda2(laplacian(GraphSample::path(n))), line_graph_lambda_min(n), 1e-9) << n;
  }
}

TEST(LineGraphLambdaMin, IsMinimumOverConnectedSamples) {
  Xoshiro256 rng(77);
  int connected = 0;
  for (int trial = 0; connected < 10000; ++trial) {
    ASSERT_LT(trial, 100000);
    const int n = 2 + static_cast<int>(rng() % 20);
    // sparse enough that tree-like graphs appear
    const double p = std::min(0.95, 1.5 * std::log(n + 1.0) / n * (0.5 + rng.uniform()));
    const GraphSample g = sample_graph(ModelParams(n, p), rng());
    if (!is_connected_bfs(g)) continue;
    ++connected;
    ASSERT_GE(lambda2(laplacian(g)), line_graph_lambda_min(n) - 1e-9) << "trial " << trial;
  }
}

}  // namespace
}  // namespace erconn
