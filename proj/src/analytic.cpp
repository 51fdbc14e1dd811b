#include "erconn/analytic.hpp"

#include <cmath>
#include <string>

#include "erconn/error.hpp"

namespace erconn {
namespace detail {

double moment_coefficient(int n, double p, int k) {
  const double m = n;
  switch (k) {
    case 1:
      return p;
    case 2:
      return p * (2.0 + p * (m - 2.0));
    case 3:
      return p * (4.0 + p * (6.0 * (m - 2.0) + p * (m - 2.0) * (m - 4.0)));
    case 4:
      return p * (8.0 + p * (25.0 * (m - 2.0) +
                             p * (6.0 * (2.0 * m - 7.0) * (m - 2.0) +
                                  p * (m - 7.0) * (m - 3.0) * (m - 2.0))));
    default:
      throw DomainError("moment order must be in 1..4, got " + std::to_string(k));
  }
}

MomentSet moment_set(int n, double p) {
  MomentSet s;
  s.m1 = n * moment_coefficient(n, p, 1);
  s.m2 = n * moment_coefficient(n, p, 2);
  s.m3 = n * moment_coefficient(n, p, 3);
  s.m4 = n * moment_coefficient(n, p, 4);
  s.var1 = 2.0 * n * p * (1.0 - p);
  s.var2 = s.m4 - s.m2 * s.m2;
  if (s.var2 < 0.0) {
    s.var2 = 0.0;
    s.var2_clamped = true;
  }
  s.sigma2 = std::sqrt(s.var2);
  return s;
}

}  // namespace detail

Eigen::MatrixXd MomentMatrix::realize() const {
  Eigen::MatrixXd m = Eigen::MatrixXd::Constant(n, n, -coefficient);
  m.diagonal().setConstant(coefficient * (n - 1));
  return m;
}

MomentMatrix laplacian_moment_matrix(const ModelParams& params, int k) {
  return {params.n(), k, detail::moment_coefficient(params.n(), params.p(), k)};
}

double eigenvalue_moment(const ModelParams& params, int k) {
  return params.n() * detail::moment_coefficient(params.n(), params.p(), k);
}

MomentSet eigenvalue_variances(const ModelParams& params) {
  return detail::moment_set(params.n(), params.p());
}

}  // namespace erconn
