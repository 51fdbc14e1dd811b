#pragma once

// Exact expectations over G(n, p) for n <= 6 by weighting every labeled graph.
//
// Graphs are encoded as bitmasks over the M = n(n-1)/2 admissible pairs in
// lexicographic order: bit b is set iff pair b of (0,1), (0,2), ..., (n-2,n-1)
// is an edge. Nothing here uses the closed-form moments; traces of L^k are
// computed in integer arithmetic and connectivity by union-find.

#include <array>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "erconn/er_graph.hpp"

namespace erconn {

inline constexpr int kMaxOracleNodes = 6;

struct ExactReport {
  int n = 0;
  double p = 0.0;
  std::array<double, 4> expected_trace_lk{};    // E[trace(L^k)], k = 1..4
  std::array<Eigen::MatrixXd, 4> expected_lk;   // E[L^k], k = 1..4
  std::array<double, 4> eigenvalue_moments{};   // E[trace(L^k)] / (n - 1)
  double expected_lambda2 = 0.0;
  double second_moment_lambda2 = 0.0;           // E[lambda2^2]
  double prob_connected = 0.0;
  double prob_lambda2_ge_lambda_min = 0.0;
  double weight_sum = 0.0;                      // should be 1
  std::int64_t graphs = 0;                      // 2^M
};

// Admissible pairs in bitmask order.
std::vector<Edge> pair_order(int n);

GraphSample graph_from_mask(int n, std::uint32_t mask);
std::uint32_t mask_from_graph(const GraphSample& g);

// Throws CapabilityError for n > kMaxOracleNodes.
ExactReport enumerate_exact(const ModelParams& params, int workers = 1);

// enumerate_exact at p_hat = 1 - (1 - p)^N.
ExactReport exact_union_report(const ModelParams& params, int union_size, int workers = 1);

}  // namespace erconn
