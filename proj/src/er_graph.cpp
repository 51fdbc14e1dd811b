#include "erconn/er_graph.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "erconn/error.hpp"

namespace erconn {

ModelParams::ModelParams(int n, double p) : n_(n), p_(p) {
  if (n < 2) throw DomainError("node count must be at least 2, got " + std::to_string(n));
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("edge probability must lie in (0, 1), got " + std::to_string(p));
  }
}

std::int64_t ModelParams::admissible_edges() const noexcept {
  return static_cast<std::int64_t>(n_) * (n_ - 1) / 2;
}

GraphSample::GraphSample(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1) throw DomainError("graph must have at least one node");
  for (auto& [i, j] : edges_) {
    if (i == j) throw DomainError("self-loop at node " + std::to_string(i));
    if (i >= static_cast<NodeId>(n) || j >= static_cast<NodeId>(n)) {
      throw DomainError("edge (" + std::to_string(i) + ", " + std::to_string(j) +
                        ") has an endpoint outside [0, " + std::to_string(n) + ")");
    }
    if (i > j) std::swap(i, j);
  }
  std::sort(edges_.begin(), edges_.end());
  edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

GraphSample GraphSample::empty(int n) { return GraphSample(n, {}); }

GraphSample GraphSample::complete(int n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i < static_cast<NodeId>(n); ++i)
    for (NodeId j = i + 1; j < static_cast<NodeId>(n); ++j) edges.emplace_back(i, j);
  return GraphSample(n, std::move(edges));
}

GraphSample GraphSample::path(int n) {
  std::vector<Edge> edges;
  for (NodeId i = 0; i + 1 < static_cast<NodeId>(n); ++i) edges.emplace_back(i, i + 1);
  return GraphSample(n, std::move(edges));
}

bool GraphSample::has_edge(NodeId i, NodeId j) const noexcept {
  if (i > j) std::swap(i, j);
  return std::binary_search(edges_.begin(), edges_.end(), Edge{i, j});
}

std::vector<int> GraphSample::degrees() const {
  std::vector<int> deg(n_, 0);
  for (const auto& [i, j] : edges_) {
    ++deg[i];
    ++deg[j];
  }
  return deg;
}

Eigen::MatrixXd GraphSample::adjacency() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n_, n_);
  for (const auto& [i, j] : edges_) {
    a(i, j) = 1.0;
    a(j, i) = 1.0;
  }
  return a;
}

LaplacianMatrix::LaplacianMatrix(const GraphSample& g) : entries_(Eigen::MatrixXd::Zero(g.n(), g.n())) {
  const auto deg = g.degrees();
  for (int i = 0; i < g.n(); ++i) entries_(i, i) = deg[i];
  for (const auto& [i, j] : g.edges()) {
    entries_(i, j) = -1.0;
    entries_(j, i) = -1.0;
  }
}

GraphSample sample_graph(const ModelParams& params, std::uint64_t seed) {
  std::vector<Edge> edges;
  for_each_sampled_edge(params, seed, [&](NodeId i, NodeId j) { edges.emplace_back(i, j); });
  return GraphSample(params.n(), std::move(edges));
}

GraphSample union_graphs(std::span<const GraphSample> samples) {
  if (samples.empty()) throw DomainError("union of an empty list of graphs");
  const int n = samples.front().n();
  std::vector<Edge> merged;
  for (const auto& g : samples) {
    if (g.n() != n) {
      throw DimensionError("cannot union graphs on " + std::to_string(n) + " and " +
                           std::to_string(g.n()) + " nodes");
    }
    merged.insert(merged.end(), g.edges().begin(), g.edges().end());
  }
  return GraphSample(n, std::move(merged));
}

GraphSample sample_union(const ModelParams& params, int union_size, std::uint64_t master_seed,
                         std::uint64_t trial) {
  if (union_size < 1) throw DomainError("union size must be at least 1");
  const std::uint64_t trial_seed = derive_seed(master_seed, trial);
  std::vector<GraphSample> parts;
  parts.reserve(union_size);
  for (int i = 0; i < union_size; ++i) {
    parts.push_back(sample_graph(params, derive_seed(trial_seed, static_cast<std::uint64_t>(i))));
  }
  return union_graphs(parts);
}

LaplacianMatrix laplacian(const GraphSample& g) { return LaplacianMatrix(g); }

bool is_connected_bfs(const GraphSample& g) {
  const int n = g.n();
  std::vector<std::vector<NodeId>> adj(n);
  for (const auto& [i, j] : g.edges()) {
    adj[i].push_back(j);
    adj[j].push_back(i);
  }
  std::vector<char> seen(n, 0);
  std::vector<NodeId> frontier{0};
  seen[0] = 1;
  int reached = 1;
  while (!frontier.empty()) {
    const NodeId v = frontier.back();
    frontier.pop_back();
    for (NodeId w : adj[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        frontier.push_back(w);
      }
    }
  }
  return reached == n;
}

void write_edge_list(std::ostream& out, const GraphSample& g) {
  out << "n=" << g.n() << '\n';
  for (const auto& [i, j] : g.edges()) out << i << ' ' << j << '\n';
}

GraphSample read_edge_list(std::istream& in) {
  std::string line;
  int n = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line.front() == '#') continue;
    if (n < 0) {
      if (line.rfind("n=", 0) != 0) {
        throw DomainError("edge list must start with a header line \"n=<count>\"");
      }
      std::istringstream hdr(line.substr(2));
      if (!(hdr >> n) || n < 1) throw DomainError("bad node count in header: " + line);
      continue;
    }
    std::istringstream fields(line);
    long long i = 0;
    long long j = 0;
    std::string extra;
    if (!(fields >> i >> j) || (fields >> extra) || i < 0 || j < 0 || i >= n || j >= n) {
      throw DomainError("malformed edge on line " + std::to_string(line_no) + ": " + line);
    }
    edges.emplace_back(static_cast<NodeId>(i), static_cast<NodeId>(j));
  }
  if (n < 0) throw DomainError("edge list is missing its \"n=<count>\" header");
  return GraphSample(n, std::move(edges));
}

}  // namespace erconn
