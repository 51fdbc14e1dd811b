#include "erconn/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "erconn/analytic.hpp"
#include "erconn/error.hpp"
#include "erconn/spectral.hpp"

namespace erconn {
namespace {

// Lower bound on E[lambda2] before clamping at zero.
double raw_expectation_lower(int n, double p_hat, double q_hat) {
  const double mean = n * p_hat;
  const double sigma = std::sqrt(2.0 * n * p_hat * q_hat);
  return order_stat_expectation_bounds(mean, sigma, n - 1, 1).lower;
}

double second_moment(int n, double p_hat) { return n * (n - 2.0) * p_hat * p_hat + 2.0 * n * p_hat; }

NMin n_min_from_ratio(double ratio, const ModelParams& params) {
  if (!(ratio > 0.0) || !(ratio < 1.0)) {
    throw DomainError("no union size brings the expected algebraic connectivity of G(" +
                      std::to_string(params.n()) + ", p) to the path-graph minimum");
  }
  const double exact = std::log(ratio) / std::log1p(-params.p());
  const auto up = static_cast<std::int64_t>(std::ceil(exact));
  return {exact, std::max<std::int64_t>(up, 1)};
}

}  // namespace

UnionParams::UnionParams(const ModelParams& base, int union_size)
    : base_(base), union_size_(union_size) {
  if (union_size < 1) throw DomainError("union size must be at least 1");
  const double log_q = union_size * std::log1p(-base.p());
  p_hat_ = -std::expm1(log_q);
  q_hat_ = std::exp(log_q);
}

UnionParams union_effective_params(const ModelParams& params, int union_size) {
  return UnionParams(params, union_size);
}

Interval order_stat_expectation_bounds(double mu, double sigma, int m, int k) {
  if (m < 1 || k < 1 || k > m) {
    throw DomainError("order statistic index k=" + std::to_string(k) + " outside 1.." +
                      std::to_string(m));
  }
  if (!(sigma >= 0.0)) throw DomainError("standard deviation must be non-negative");
  const double below = std::sqrt(static_cast<double>(m - k) / k);
  const double above = std::sqrt(static_cast<double>(k - 1) / (m - k + 1));
  return {mu - sigma * below, mu + sigma * above};
}

Interval expected_lambda2_bounds(const UnionParams& u) {
  const double lower = raw_expectation_lower(u.n(), u.p_hat(), u.q_hat());
  return {std::max(lower, 0.0), u.n() * u.p_hat()};
}

VarianceBounds lambda2_variance_bounds(const UnionParams& u) {
  const int n = u.n();
  const double p = u.p_hat();
  const double e2 = second_moment(n, p);
  const double e_lower = expected_lambda2_bounds(u).lower;
  const double upper = e2 - e_lower * e_lower;

  const MomentSet moments = detail::moment_set(n, p);
  const double raw_lower = e2 - moments.sigma2 * std::sqrt(n - 2.0) - (n * p) * (n * p);
  return {std::max(raw_lower, 0.0), std::max(upper, 0.0), raw_lower < 0.0};
}

double n_min_tau(int n) {
  const double m = n;
  const double s = std::sin(std::numbers::pi / (2.0 * m));
  const double one_minus_cos = 2.0 * s * s;
  return std::sqrt(16.0 * m * m * (m - 2.0) * one_minus_cos +
                   32.0 * m * (2.0 - m) * one_minus_cos * one_minus_cos +
                   4.0 * m * m * (m - 2.0) * (m - 2.0));
}

NMin n_min_closed_form(const ModelParams& params) {
  const double m = params.n();
  const double c = std::cos(std::numbers::pi / m);
  const double ratio = (4.0 * m * m + 4.0 * m * c - n_min_tau(params.n()) - 8.0 * m) /
                       (6.0 * m * m - 8.0 * m);
  return n_min_from_ratio(ratio, params);
}

NMin n_min(const ModelParams& params) {
  // Feasibility is a property of the exact threshold.
  n_min_closed_form(params);
  const double m = params.n();
  const double c = std::cos(std::numbers::pi / m);
  const double ratio = (4.0 * m * m - 4.0 * m * c - n_min_tau(params.n()) - 4.0 * m) /
                       (6.0 * m * m - 8.0 * m);
  return n_min_from_ratio(ratio, params);
}

double n_min_asymptotic(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("edge probability must lie in (0, 1)");
  return -std::log(3.0) / std::log1p(-p);
}

double paley_zygmund_bound(double mean_lb, double second_moment_ub, double theta) {
  if (!(theta >= 0.0 && theta <= 1.0)) throw DomainError("theta must lie in [0, 1]");
  if (!(second_moment_ub > 0.0)) throw DomainError("second-moment bound must be positive");
  const double slack = 1.0 - theta;
  return std::clamp(slack * slack * mean_lb * mean_lb / second_moment_ub, 0.0, 1.0);
}

std::string_view to_string(BoundStatus status) noexcept {
  switch (status) {
    case BoundStatus::certified:
      return "certified";
    case BoundStatus::below_n_min:
      return "below_n_min";
    case BoundStatus::zero_lower_bound:
      return "zero_lower_bound";
  }
  return "unknown";
}

ProbabilityBound connectivity_probability_bound(const ModelParams& params, int union_size) {
  const UnionParams u(params, union_size);
  ProbabilityBound result{BoundStatus::below_n_min, std::nullopt, std::nullopt, 0};
  try {
    result.n_min = n_min(params).rounded_up;
  } catch (const DomainError&) {
    return result;
  }
  if (union_size < result.n_min) return result;

  const double mean_lb = expected_lambda2_bounds(u).lower;
  if (mean_lb <= 0.0) {
    result.status = BoundStatus::zero_lower_bound;
    result.value = 0.0;
    return result;
  }
  const double lambda_min = line_graph_lambda_min(params.n());
  // theta uses n p_hat, the upper bound on E[lambda2], as its surrogate for
  // E[lambda2]. N >= N_min gives n p_hat >= mean_lb >= lambda_min, so theta <= 1.
  const double theta = std::min(lambda_min / (params.n() * u.p_hat()), 1.0);
  result.status = BoundStatus::certified;
  result.theta = theta;
  result.value = paley_zygmund_bound(mean_lb, second_moment(params.n(), u.p_hat()), theta);
  return result;
}

BoundReport bound_report(const ModelParams& params, int union_size) {
  const UnionParams u(params, union_size);
  BoundReport r;
  r.p_hat = u.p_hat();
  const Interval e = expected_lambda2_bounds(u);
  r.e_lambda2_lower = e.lower;
  r.e_lambda2_upper = e.upper;
  const VarianceBounds v = lambda2_variance_bounds(u);
  r.var_lambda2_lower = v.lower;
  r.var_lambda2_upper = v.upper;
  r.var_lower_clamped = v.lower_clamped;
  r.lambda_min = line_graph_lambda_min(params.n());
  r.tau = n_min_tau(params.n());
  try {
    r.n_min = n_min(params);
  } catch (const DomainError&) {
    r.n_min.reset();
  }
  const ProbabilityBound pb = connectivity_probability_bound(params, union_size);
  r.prob_status = pb.status;
  r.theta = pb.theta;
  r.prob_lower = pb.value;
  return r;
}

}  // namespace erconn
