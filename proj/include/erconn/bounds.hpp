#pragma once

// Bounds on the algebraic connectivity of a union of N graphs drawn from
// G(n, p).
//
// A union of N independent G(n, p) graphs is distributed as G(n, p_hat) with
// p_hat = 1 - (1 - p)^N. The non-trivial Laplacian eigenvalues share mean
// n p_hat and variance 2 n p_hat q_hat, and lambda2 is their minimum, so the
// order-statistic inequality brackets E[lambda2]. The bracket feeds the union
// size needed for E[lambda2] to reach the path-graph minimum lambda_min, and a
// Paley–Zygmund lower bound on P[lambda2 >= lambda_min].

#include <cstdint>
#include <optional>
#include <string_view>

#include "erconn/er_graph.hpp"

namespace erconn {

class UnionParams {
 public:
  UnionParams(const ModelParams& base, int union_size);

  const ModelParams& base() const noexcept { return base_; }
  int union_size() const noexcept { return union_size_; }
  int n() const noexcept { return base_.n(); }
  // 1 - (1 - p)^N, evaluated as -expm1(N log1p(-p)).
  double p_hat() const noexcept { return p_hat_; }
  // (1 - p)^N, evaluated directly rather than as 1 - p_hat.
  double q_hat() const noexcept { return q_hat_; }

 private:
  ModelParams base_;
  int union_size_;
  double p_hat_;
  double q_hat_;
};

UnionParams union_effective_params(const ModelParams& params, int union_size);

struct Interval {
  double lower;
  double upper;
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Bracket on E[X_(k:m)] for m variables with common mean mu and standard
// deviation sigma, under any dependence:
//   mu - sigma sqrt((m-k)/k) <= E[X_(k:m)] <= mu + sigma sqrt((k-1)/(m-k+1)).
Interval order_stat_expectation_bounds(double mu, double sigma, int m, int k);

// [max(n p - sqrt(2n(n-2) p q), 0), n p] at p = p_hat.
Interval expected_lambda2_bounds(const UnionParams& u);

struct VarianceBounds {
  double lower;
  double upper;
  // The raw lower expression was negative and has been replaced by 0.
  bool lower_clamped;
};

// With E2 = n(n-2)p^2 + 2np (the common second moment, an upper bound on
// E[lambda2^2]):
//   upper = E2 - max(np - sqrt(2n(n-2)pq), 0)^2
//   lower = E2 - sigma[l^2] sqrt(n-2) - n^2 p^2, clamped at 0
// at p = p_hat.
VarianceBounds lambda2_variance_bounds(const UnionParams& u);

struct NMin {
  double exact;              // real-valued bound on N
  std::int64_t rounded_up;   // ceil(exact), at least 1
};

// Union size at which the lower bound on E[lambda2] reaches lambda_min, in the
// form that reproduces the reference N_min table (tables.hpp):
//   N = log((4n^2 - 4n cos(pi/n) - tau(n) - 4n) / (6n^2 - 8n)) / log(1 - p).
// For n >= 3 this is never below n_min_closed_form. Throws DomainError when
// no union size suffices (n = 2).
NMin n_min(const ModelParams& params);

// Exact threshold from solving n p_hat - sqrt(2n(n-2) p_hat q_hat) >= lambda_min
// for q_hat:
//   N = log((4n^2 + 4n cos(pi/n) - tau(n) - 8n) / (6n^2 - 8n)) / log(1 - p),
//   tau(n) = sqrt(16n^2(n-2)(1-c) + 32n(2-n)(1-c)^2 + 4n^2(n-2)^2), c = cos(pi/n).
// Throws DomainError when the log argument is not positive.
NMin n_min_closed_form(const ModelParams& params);

double n_min_tau(int n);

// Large-n limit of N_min: -log(3) / log(1 - p).
double n_min_asymptotic(double p);

// (1 - theta)^2 mean_lb^2 / second_moment_ub, a lower bound on
// P[Z > theta E[Z]] for non-negative Z with E[Z] >= mean_lb >= 0 and
// E[Z^2] <= second_moment_ub.
double paley_zygmund_bound(double mean_lb, double second_moment_ub, double theta);

enum class BoundStatus {
  certified,        // N >= N_min; value is a valid lower bound
  below_n_min,      // N < N_min (or no N suffices); no value
  zero_lower_bound  // lower bound on E[lambda2] is 0; value is the trivial 0
};

std::string_view to_string(BoundStatus status) noexcept;

struct ProbabilityBound {
  BoundStatus status;
  std::optional<double> value;
  std::optional<double> theta;  // lambda_min / (n p_hat)
  std::int64_t n_min = 0;       // 0 when no union size suffices
};

// Lower bound on P[lambda2(U_N) >= lambda_min]:
//   (1 - lambda_min/(n p_hat))^2 (n p_hat - sqrt(2n(n-2) p_hat q_hat))^2
//     / (n(n-2) p_hat^2 + 2n p_hat).
ProbabilityBound connectivity_probability_bound(const ModelParams& params, int union_size);

struct BoundReport {
  double p_hat = 0.0;
  double e_lambda2_lower = 0.0;
  double e_lambda2_upper = 0.0;
  double var_lambda2_lower = 0.0;
  double var_lambda2_upper = 0.0;
  bool var_lower_clamped = false;
  double lambda_min = 0.0;
  double tau = 0.0;
  std::optional<NMin> n_min;  // absent when infeasible
  std::optional<double> theta;
  std::optional<double> prob_lower;
  BoundStatus prob_status = BoundStatus::below_n_min;
};

BoundReport bound_report(const ModelParams& params, int union_size);

}  // namespace erconn
