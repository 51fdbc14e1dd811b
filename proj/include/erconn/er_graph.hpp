#pragma once

// Erdős–Rényi graph samples, unions, and their matrix views.
//
// Nodes are 0-based. A GraphSample stores its edges as a sorted set of
// unordered pairs (i < j); adjacency and Laplacian matrices are realized on
// demand.

#include <cstdint>
#include <iosfwd>
#include <span>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace erconn {

using NodeId = std::uint32_t;
using Edge = std::pair<NodeId, NodeId>;

// Parameters of G(n, p): n >= 2 nodes, each admissible edge present with
// probability p in (0, 1).
class ModelParams {
 public:
  ModelParams(int n, double p);

  int n() const noexcept { return n_; }
  double p() const noexcept { return p_; }
  double q() const noexcept { return 1.0 - p_; }
  // n(n-1)/2
  std::int64_t admissible_edges() const noexcept;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  int n_;
  double p_;
};

class GraphSample {
 public:
  // Validates endpoints, drops duplicates, normalizes each pair to i < j.
  // Self-loops and out-of-range endpoints throw DomainError.
  GraphSample(int n, std::vector<Edge> edges);

  static GraphSample empty(int n);
  static GraphSample complete(int n);
  static GraphSample path(int n);

  int n() const noexcept { return n_; }
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool has_edge(NodeId i, NodeId j) const noexcept;

  std::vector<int> degrees() const;
  Eigen::MatrixXd adjacency() const;

  friend bool operator==(const GraphSample&, const GraphSample&) = default;

 private:
  int n_;
  std::vector<Edge> edges_;
};

// L = D - A, built from integer degrees so every row sums to exactly zero.
class LaplacianMatrix {
 public:
  explicit LaplacianMatrix(const GraphSample& g);

  int n() const noexcept { return static_cast<int>(entries_.rows()); }
  const Eigen::MatrixXd& entries() const noexcept { return entries_; }
  double operator()(int i, int j) const { return entries_(i, j); }

 private:
  Eigen::MatrixXd entries_;
};

// Calls visit(i, j) for every admissible pair (i < j, lexicographic order)
// that is included under one uniform draw per pair from a stream seeded with
// `seed`. This is the single definition of the sampling algorithm.
template <typename Visitor>
void for_each_sampled_edge(const ModelParams& params, std::uint64_t seed, Visitor&& visit);

GraphSample sample_graph(const ModelParams& params, std::uint64_t seed);

// Set union of edge sets. Throws DimensionError on mismatched n and
// DomainError on an empty list.
GraphSample union_graphs(std::span<const GraphSample> samples);

// Union of N graphs for trial `trial` of a run seeded with `master_seed`.
// Graph i of the trial is sample_graph(params, derive_seed(derive_seed(master_seed, trial), i)).
GraphSample sample_union(const ModelParams& params, int union_size, std::uint64_t master_seed,
                         std::uint64_t trial);

LaplacianMatrix laplacian(const GraphSample& g);

// Breadth-first reachability from node 0.
bool is_connected_bfs(const GraphSample& g);

// Edge-list text format: a header line "n=<count>" followed by one "i j" pair
// per line. Blank lines and lines starting with '#' are ignored on read.
void write_edge_list(std::ostream& out, const GraphSample& g);
GraphSample read_edge_list(std::istream& in);

}  // namespace erconn

#include "erconn/rng.hpp"

namespace erconn {

template <typename Visitor>
void for_each_sampled_edge(const ModelParams& params, std::uint64_t seed, Visitor&& visit) {
  Xoshiro256 rng(seed);
  const BernoulliThreshold include(params.p());
  const auto n = static_cast<NodeId>(params.n());
  for (NodeId i = 0; i < n; ++i) {
    for (NodeId j = i + 1; j < n; ++j) {
      if (include(rng)) visit(i, j);
    }
  }
}

}  // namespace erconn
