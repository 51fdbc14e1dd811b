#pragma once

// Eigenvalues of dense symmetric matrices and the Laplacian quantities built
// on them.
//
// symmetric_eigenvalues reduces the matrix to tridiagonal form with
// Householder reflections and then runs implicit-shift symmetric QR
// (Eigen::SelfAdjointEigenSolver, eigenvalues only). Both stages converge
// unconditionally for symmetric input. Storage is dense and the cost O(n^3),
// so Laplacian spectra are limited to kMaxSpectralNodes nodes.

#include <vector>

#include <Eigen/Dense>

#include "erconn/er_graph.hpp"

namespace erconn {

// An eigenvalue with magnitude at most kZeroTolerance counts as zero.
inline constexpr double kZeroTolerance = 1e-8;

// lambda2 >= lambda_min comparisons allow this slack; the path graph attains
// lambda_min exactly.
inline constexpr double kLambdaMinSlack = 1e-9;

inline constexpr int kMaxSpectralNodes = 2000;

// Ascending eigenvalues lambda_1 <= ... <= lambda_n.
class Spectrum {
 public:
  explicit Spectrum(std::vector<double> values);

  const std::vector<double>& values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double smallest() const { return values_.front(); }
  // Second smallest eigenvalue; requires size() >= 2.
  double lambda2() const;
  double sum() const noexcept;

 private:
  std::vector<double> values_;
};

// Throws DomainError when |m - m^T| exceeds 1e-12 anywhere or m is empty.
Spectrum symmetric_eigenvalues(const Eigen::MatrixXd& m);

// Algebraic connectivity. Throws CapabilityError above kMaxSpectralNodes.
double lambda2(const LaplacianMatrix& l);

// lambda2 > kZeroTolerance
bool is_connected_spectral(double lambda2_value) noexcept;

struct StructuredEigs {
  double simple_eig;    // alpha + (n-1) beta, eigenvector 1
  double repeated_eig;  // alpha - beta, multiplicity n-1
};

// Eigenvalues of (alpha - beta) I + beta J for n >= 2.
StructuredEigs structured_matrix_eigs(double alpha, double beta, int n);

// Smallest algebraic connectivity of any connected graph on n nodes,
// attained by the path: 2 (1 - cos(pi / n)).
double line_graph_lambda_min(int n);

}  // namespace erconn
