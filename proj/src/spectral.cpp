#include "erconn/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "erconn/error.hpp"

namespace erconn {

Spectrum::Spectrum(std::vector<double> values) : values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
}

double Spectrum::lambda2() const {
  if (values_.size() < 2) throw DomainError("lambda2 needs at least two eigenvalues");
  return values_[1];
}

double Spectrum::sum() const noexcept {
  return std::accumulate(values_.begin(), values_.end(), 0.0);
}

Spectrum symmetric_eigenvalues(const Eigen::MatrixXd& m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw DomainError("symmetric_eigenvalues needs a non-empty square matrix");
  }
  if ((m - m.transpose()).cwiseAbs().maxCoeff() > 1e-12) {
    throw DomainError("matrix is not symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw CapabilityError("symmetric eigensolver did not converge");
  }
  const auto& ev = solver.eigenvalues();
  return Spectrum(std::vector<double>(ev.data(), ev.data() + ev.size()));
}

double lambda2(const LaplacianMatrix& l) {
  if (l.n() > kMaxSpectralNodes) {
    throw CapabilityError("dense eigensolve limited to " + std::to_string(kMaxSpectralNodes) +
                          " nodes, got " + std::to_string(l.n()));
  }
  return symmetric_eigenvalues(l.entries()).lambda2();
}

bool is_connected_spectral(double lambda2_value) noexcept { return lambda2_value > kZeroTolerance; }

StructuredEigs structured_matrix_eigs(double alpha, double beta, int n) {
  if (n < 2) throw DomainError("structured_matrix_eigs needs n >= 2");
  return {alpha + (n - 1) * beta, alpha - beta};
}

double line_graph_lambda_min(int n) {
  if (n < 2) throw DomainError("line_graph_lambda_min needs n >= 2");
  // 2 (1 - cos x) = 4 sin^2(x / 2), without the cancellation at large n.
  const double s = std::sin(std::numbers::pi / (2.0 * n));
  return 4.0 * s * s;
}

}  // namespace erconn
