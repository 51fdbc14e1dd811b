#include "erconn/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <numeric>
#include <string>
#include <thread>

#include "erconn/bounds.hpp"
#include "erconn/error.hpp"
#include "erconn/spectral.hpp"

namespace erconn {
namespace {

// Fixed partition of the mask range; workers only change who sums a chunk.
constexpr int kChunks = 64;

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

struct Accumulator {
  std::array<double, 4> trace{};
  std::array<Eigen::MatrixXd, 4> lk;
  double lambda2 = 0.0;
  double lambda2_sq = 0.0;
  double connected = 0.0;
  double above_min = 0.0;
  double weight = 0.0;

  explicit Accumulator(int n) {
    for (auto& m : lk) m = Eigen::MatrixXd::Zero(n, n);
  }

  void merge(const Accumulator& o) {
    for (int k = 0; k < 4; ++k) {
      trace[k] += o.trace[k];
      lk[k] += o.lk[k];
    }
    lambda2 += o.lambda2;
    lambda2_sq += o.lambda2_sq;
    connected += o.connected;
    above_min += o.above_min;
    weight += o.weight;
  }
};

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }

  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }

  // Returns true when x and y were in different sets.
  bool unite(int x, int y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent_[y] = x;
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Weight p^e q^(M-e) for every edge count e, in log space.
std::vector<double> edge_count_weights(double p, int pairs) {
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  std::vector<double> w(pairs + 1);
  for (int e = 0; e <= pairs; ++e) w[e] = std::exp(e * log_p + (pairs - e) * log_q);
  return w;
}

}  // namespace

std::vector<Edge> pair_order(int n) {
  std::vector<Edge> pairs;
  for (NodeId i = 0; i < static_cast<NodeId>(n); ++i)
    for (NodeId j = i + 1; j < static_cast<NodeId>(n); ++j) pairs.emplace_back(i, j);
  return pairs;
}

GraphSample graph_from_mask(int n, std::uint32_t mask) {
  const auto pairs = pair_order(n);
  std::vector<Edge> edges;
  for (std::size_t b = 0; b < pairs.size(); ++b)
    if (mask >> b & 1U) edges.push_back(pairs[b]);
  return GraphSample(n, std::move(edges));
}

std::uint32_t mask_from_graph(const GraphSample& g) {
  if (g.n() > kMaxOracleNodes) throw CapabilityError("bitmask encoding limited to n <= 6");
  const auto pairs = pair_order(g.n());
  std::uint32_t mask = 0;
  for (std::size_t b = 0; b < pairs.size(); ++b)
    if (g.has_edge(pairs[b].first, pairs[b].second)) mask |= 1U << b;
  return mask;
}

ExactReport enumerate_exact(const ModelParams& params, int workers) {
  const int n = params.n();
  if (n > kMaxOracleNodes) {
    throw CapabilityError("exact enumeration limited to n <= " + std::to_string(kMaxOracleNodes) +
                          ", got " + std::to_string(n));
  }
  const auto pairs = pair_order(n);
  const int m = static_cast<int>(pairs.size());
  const std::uint32_t total = 1U << m;
  const auto weights = edge_count_weights(params.p(), m);
  const double lambda_min = line_graph_lambda_min(n);

  std::vector<Accumulator> chunks(kChunks, Accumulator(n));
  auto sum_chunk = [&](int c) {
    Accumulator& acc = chunks[c];
    const std::uint32_t begin = static_cast<std::uint32_t>(std::uint64_t{total} * c / kChunks);
    const std::uint32_t end = static_cast<std::uint32_t>(std::uint64_t{total} * (c + 1) / kChunks);
    IntMatrix lap(n, n);
    for (std::uint32_t mask = begin; mask < end; ++mask) {
      lap.setZero();
      DisjointSets sets(n);
      int components = n;
      for (int b = 0; b < m; ++b) {
        if (!(mask >> b & 1U)) continue;
        const auto [i, j] = pairs[b];
        lap(i, j) = lap(j, i) = -1;
        ++lap(i, i);
        ++lap(j, j);
        if (sets.unite(static_cast<int>(i), static_cast<int>(j))) --components;
      }
      const double w = weights[std::popcount(mask)];
      IntMatrix power = lap;
      for (int k = 0; k < 4; ++k) {
        if (k > 0) power = power * lap;
        acc.trace[k] += w * static_cast<double>(power.trace());
        acc.lk[k] += w * power.cast<double>();
      }
      const double l2 = symmetric_eigenvalues(lap.cast<double>()).lambda2();
      acc.lambda2 += w * l2;
      acc.lambda2_sq += w * l2 * l2;
      if (components == 1) acc.connected += w;
      if (l2 >= lambda_min - kLambdaMinSlack) acc.above_min += w;
      acc.weight += w;
    }
  };

  const int threads = std::clamp(workers, 1, kChunks);
  if (threads == 1) {
    for (int c = 0; c < kChunks; ++c) sum_chunk(c);
  } else {
    std::atomic<int> next{0};
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (int c = next++; c < kChunks; c = next++) sum_chunk(c);
      });
    }
  }

  Accumulator total_acc(n);
  for (const auto& c : chunks) total_acc.merge(c);

  ExactReport r;
  r.n = n;
  r.p = params.p();
  r.graphs = total;
  r.weight_sum = total_acc.weight;
  for (int k = 0; k < 4; ++k) {
    r.expected_trace_lk[k] = total_acc.trace[k];
    r.expected_lk[k] = total_acc.lk[k];
    r.eigenvalue_moments[k] = total_acc.trace[k] / (n - 1);
  }
  r.expected_lambda2 = total_acc.lambda2;
  r.second_moment_lambda2 = total_acc.lambda2_sq;
  r.prob_connected = total_acc.connected;
  r.prob_lambda2_ge_lambda_min = total_acc.above_min;
  return r;
}

ExactReport exact_union_report(const ModelParams& params, int union_size, int workers) {
  const UnionParams u(params, union_size);
  return enumerate_exact(ModelParams(params.n(), u.p_hat()), workers);
}

}  // namespace erconn
