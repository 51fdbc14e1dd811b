#include <gtest/gtest.h>

#include <cmath>

#include "erconn/analytic.hpp"
#include "erconn/error.hpp"
#include "erconn/montecarlo.hpp"
#include "erconn/oracle.hpp"
#include "erconn/spectral.hpp"

namespace erconn {
namespace {

TEST(LaplacianMomentMatrix, Examples) {
  EXPECT_DOUBLE_EQ(laplacian_moment_matrix(ModelParams(10, 0.5), 1).coefficient, 0.5);
  for (int k = 1; k <= 4; ++k)
    EXPECT_LT(laplacian_moment_matrix(ModelParams(10, 1e-12), k).coefficient, 1e-10);
  EXPECT_DOUBLE_EQ(laplacian_moment_matrix(ModelParams(4, 0.5), 2).coefficient, 1.5);
  EXPECT_THROW(laplacian_moment_matrix(ModelParams(4, 0.5), 0), DomainError);
  EXPECT_THROW(laplacian_moment_matrix(ModelParams(4, 0.5), 5), DomainError);
}

TEST(LaplacianMomentMatrix, SecondMomentMatchesEnumerationAtN4) {
  const ModelParams params(4, 0.5);
  const ExactReport exact = enumerate_exact(params);
  const Eigen::MatrixXd expected = laplacian_moment_matrix(params, 2).realize();
  EXPECT_LE((exact.expected_lk[1] - expected).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_DOUBLE_EQ(expected(0, 0), 1.5 * 3);
  EXPECT_DOUBLE_EQ(expected(0, 1), -1.5);
}

TEST(LaplacianMomentMatrix, StructuredEigenvaluesAreZeroAndNTimesCoefficient) {
  for (int n : {3, 6, 11}) {
    for (int k = 1; k <= 4; ++k) {
      const MomentMatrix m = laplacian_moment_matrix(ModelParams(n, 0.35), k);
      const StructuredEigs e = structured_matrix_eigs(m.coefficient * (n - 1), -m.coefficient, n);
      EXPECT_NEAR(e.simple_eig, 0.0, 1e-12);
      EXPECT_NEAR(e.repeated_eig, n * m.coefficient, 1e-12 * n * m.coefficient);
      const Spectrum s = symmetric_eigenvalues(m.realize());
      EXPECT_NEAR(s[0], 0.0, 1e-9);
      for (int i = 1; i < n; ++i) EXPECT_NEAR(s[i], e.repeated_eig, 1e-9 * e.repeated_eig);
    }
  }
}

TEST(EigenvalueMoment, Examples) {
  EXPECT_DOUBLE_EQ(eigenvalue_moment(ModelParams(10, 0.5), 1), 5.0);
  EXPECT_DOUBLE_EQ(eigenvalue_moment(ModelParams(4, 0.5), 2), 6.0);

  const ExactReport n4 = enumerate_exact(ModelParams(4, 0.5));
  EXPECT_NEAR(n4.expected_trace_lk[1] / 3.0, 6.0, 1e-12);

  const ModelParams p5(5, 0.3);
  const ExactReport n5 = enumerate_exact(p5);
  const double quartic = eigenvalue_moment(p5, 4);
  EXPECT_NEAR(n5.eigenvalue_moments[3], quartic, 1e-10 * quartic);
}

TEST(EigenvalueMoment, TraceConsistencyWithEnumeration) {
  for (int n : {4, 5, 6}) {
    for (double p : {0.2, 0.5, 0.8}) {
      const ModelParams params(n, p);
      const ExactReport exact = enumerate_exact(params);
      for (int k = 1; k <= 4; ++k) {
        const double analytic = (n - 1) * eigenvalue_moment(params, k);
        EXPECT_NEAR(exact.expected_trace_lk[k - 1], analytic, 1e-10 * analytic)
            << "n=" << n << " p=" << p << " k=" << k;
      }
      EXPECT_NEAR(exact.expected_trace_lk[0], n * (n - 1) * p, 1e-12 * n * n);
    }
  }
}

TEST(EigenvalueMoment, ExpectedTraceByMonteCarlo) {
  // E[trace L] = 2 E[|E|] = n(n-1)p
  const ModelParams params(12, 0.3);
  constexpr int kTrials = 50000;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int t = 0; t < kTrials; ++t) {
    const double tr = 2.0 * sample_graph(params, derive_seed(9, t)).edge_count();
    sum += tr;
    sum_sq += tr * tr;
  }
  const double mean = sum / kTrials;
  const double se = std::sqrt((sum_sq / kTrials - mean * mean) / kTrials);
  EXPECT_NEAR(mean, 12 * 11 * 0.3, 4.0 * se);
}

TEST(EigenvalueMoment, IncreasingInPForLargerN) {
  for (int n : {8, 10, 50, 1000}) {
    for (int k = 1; k <= 4; ++k) {
      double prev = 0.0;
      for (int i = 1; i < 1000; ++i) {
        const double v = eigenvalue_moment(ModelParams(n, i / 1000.0), k);
        ASSERT_GT(v, prev) << "n=" << n << " k=" << k << " p=" << i / 1000.0;
        prev = v;
      }
    }
  }
}

TEST(EigenvalueVariances, Examples) {
  const MomentSet s = eigenvalue_variances(ModelParams(10, 0.5));
  EXPECT_DOUBLE_EQ(s.var1, 5.0);
  EXPECT_DOUBLE_EQ(s.m1, 5.0);
  EXPECT_FALSE(s.var2_clamped);

  EXPECT_LT(eigenvalue_variances(ModelParams(10, 1.0 - 1e-12)).var1, 1e-9);

  const ModelParams p5(5, 0.3);
  const MomentSet a = eigenvalue_variances(p5);
  const ExactReport exact = enumerate_exact(p5);
  const auto& m = exact.eigenvalue_moments;
  const double var1 = m[1] - m[0] * m[0];
  const double var2 = m[3] - m[1] * m[1];
  EXPECT_NEAR(a.var1, var1, 1e-10 * var1);
  EXPECT_NEAR(a.var2, var2, 1e-10 * var2);
  EXPECT_NEAR(a.sigma2, std::sqrt(var2), 1e-10 * std::sqrt(var2));
}

TEST(EigenvalueVariances, CauchySchwarzAndLimits) {
  for (int n : {2, 3, 5, 10, 100, 10000}) {
    for (double p : {1e-6, 0.01, 0.2, 0.5, 0.9, 0.999}) {
      const MomentSet s = eigenvalue_variances(ModelParams(n, p));
      EXPECT_DOUBLE_EQ(s.m1, n * p);
      EXPECT_LE(s.m1 * s.m1, s.m2 * (1 + 1e-12));
      EXPECT_LE(s.m2 * s.m2, s.m4 * (1 + 1e-12));
      EXPECT_GE(s.var1, 0.0);
      EXPECT_GE(s.var2, 0.0);
      EXPECT_NEAR(s.var1, s.m2 - s.m1 * s.m1, 1e-9 * s.m2);
    }
  }
  const MomentSet tiny = eigenvalue_variances(ModelParams(20, 1e-12));
  EXPECT_LT(tiny.m4, 1e-9);
  EXPECT_LT(tiny.var2, 1e-9);
}

}  // namespace
}  // namespace erconn
