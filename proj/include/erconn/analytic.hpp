#pragma once

// Closed-form moments of the Laplacian of G(n, p) and of its eigenvalues.
//
// For k = 1..4, E[L^k] = c_k(n, p) (nI - J). The matrix nI - J has eigenvalue
// 0 once (eigenvector 1) and n with multiplicity n - 1, so each non-trivial
// eigenvalue l_i (i >= 2) has E[l_i^k] = n c_k.

#include <Eigen/Dense>

#include "erconn/er_graph.hpp"

namespace erconn {

// c_k (nI - J)
struct MomentMatrix {
  int n;
  int k;
  double coefficient;

  Eigen::MatrixXd realize() const;
};

MomentMatrix laplacian_moment_matrix(const ModelParams& params, int k);

// E[l_i^k] for i >= 2.
double eigenvalue_moment(const ModelParams& params, int k);

struct MomentSet {
  double m1 = 0.0;
  double m2 = 0.0;
  double m3 = 0.0;
  double m4 = 0.0;
  double var1 = 0.0;    // Var[l_i] = 2npq
  double var2 = 0.0;    // Var[l_i^2] = m4 - m2^2
  double sigma2 = 0.0;  // sqrt(var2)
  // var2 came out negative through rounding and was clamped to zero.
  bool var2_clamped = false;
};

MomentSet eigenvalue_variances(const ModelParams& params);

namespace detail {
// Same formulas on raw (n, p) with p allowed to reach 1. Union edge
// probabilities round to 1.0 for large N, and the polynomials stay valid there.
double moment_coefficient(int n, double p, int k);
MomentSet moment_set(int n, double p);
}  // namespace detail

}  // namespace erconn
