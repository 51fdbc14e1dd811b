#include "erconn/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>

#include "erconn/error.hpp"
#include "erconn/spectral.hpp"
#include "erconn/stats.hpp"

namespace erconn {
namespace {

constexpr std::int64_t kTrialsPerBlock = 64;

bool bfs_connected(const std::vector<char>& adj, int n) {
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    const char* row = adj.data() + static_cast<std::size_t>(v) * n;
    for (int w = 0; w < n; ++w) {
      if (row[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

void validate(const McConfig& config) {
  if (config.union_size < 1) throw DomainError("union size must be at least 1");
  if (config.trials < 1) throw DomainError("trials must be at least 1");
  if (config.workers < 1) throw DomainError("workers must be at least 1");
  if (config.params.n() > kMaxSpectralNodes) {
    throw CapabilityError("Monte Carlo needs dense eigensolves; n=" +
                          std::to_string(config.params.n()) + " exceeds the ceiling of " +
                          std::to_string(kMaxSpectralNodes));
  }
}

}  // namespace

TrialOutcome run_trial(const ModelParams& params, int union_size, std::uint64_t master_seed,
                       std::uint64_t trial) {
  const int n = params.n();
  std::vector<char> adj(static_cast<std::size_t>(n) * n, 0);
  const std::uint64_t trial_seed = derive_seed(master_seed, trial);
  for (int g = 0; g < union_size; ++g) {
    for_each_sampled_edge(params, derive_seed(trial_seed, static_cast<std::uint64_t>(g)),
                          [&](NodeId i, NodeId j) {
                            adj[static_cast<std::size_t>(i) * n + j] = 1;
                            adj[static_cast<std::size_t>(j) * n + i] = 1;
                          });
  }
  Eigen::MatrixXd lap = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    int degree = 0;
    for (int j = 0; j < n; ++j) {
      if (adj[static_cast<std::size_t>(i) * n + j]) {
        lap(i, j) = -1.0;
        ++degree;
      }
    }
    lap(i, i) = degree;
  }
  return {symmetric_eigenvalues(lap).lambda2(), bfs_connected(adj, n)};
}

McEstimate run_mc(const McConfig& config) {
  validate(config);
  const std::int64_t trials = config.trials;
  std::vector<double> lambda2s(trials);
  std::vector<char> bfs(trials);

  const std::int64_t blocks = (trials + kTrialsPerBlock - 1) / kTrialsPerBlock;
  std::atomic<std::int64_t> next_block{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  auto work = [&] {
    try {
      for (std::int64_t b = next_block++; b < blocks && !failed; b = next_block++) {
        const std::int64_t end = std::min(trials, (b + 1) * kTrialsPerBlock);
        for (std::int64_t t = b * kTrialsPerBlock; t < end; ++t) {
          const TrialOutcome o = run_trial(config.params, config.union_size, config.master_seed,
                                           static_cast<std::uint64_t>(t));
          lambda2s[t] = o.lambda2;
          bfs[t] = o.connected_bfs;
        }
      }
    } catch (...) {
      if (!failed.exchange(true)) failure = std::current_exception();
    }
  };
  const int workers = static_cast<int>(std::min<std::int64_t>(config.workers, blocks));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
  }
  if (failure) std::rethrow_exception(failure);

  const double lambda_min = line_graph_lambda_min(config.params.n());
  std::int64_t connected = 0;
  std::int64_t above_min = 0;
  McEstimate est;
  est.trials = trials;
  for (std::int64_t t = 0; t < trials; ++t) {
    const bool spectral = is_connected_spectral(lambda2s[t]);
    connected += spectral;
    above_min += lambda2s[t] >= lambda_min - kLambdaMinSlack;
    est.connectivity_mismatches += spectral != static_cast<bool>(bfs[t]);
  }
  const stats::SampleMoments moments = stats::sample_moments(lambda2s);
  est.mean_lambda2 = moments.mean;
  est.var_lambda2 = moments.variance;
  est.stderr_mean = trials > 1 ? std::sqrt(moments.variance / static_cast<double>(trials)) : 0.0;
  est.prob_connected = static_cast<double>(connected) / static_cast<double>(trials);
  est.prob_ge_lambda_min = static_cast<double>(above_min) / static_cast<double>(trials);
  est.ci_mean_lambda2 = stats::mean_halfwidth(moments);
  est.ci_var_lambda2 = stats::variance_halfwidth(moments);
  est.wilson_connected = stats::wilson_interval(connected, trials);
  est.wilson_ge_lambda_min = stats::wilson_interval(above_min, trials);
  est.ci_prob_connected = 0.5 * (est.wilson_connected.upper - est.wilson_connected.lower);
  est.ci_prob_ge_lambda_min =
      0.5 * (est.wilson_ge_lambda_min.upper - est.wilson_ge_lambda_min.lower);
  est.ci_reliable = trials >= kMinReliableTrials;
  return est;
}

std::vector<SweepRow> sweep(std::span<const McConfig> configs) {
  std::vector<SweepRow> rows;
  rows.reserve(configs.size());
  for (const McConfig& config : configs) {
    SweepRow row{config, std::nullopt, std::nullopt, {}};
    try {
      row.bounds = bound_report(config.params, config.union_size);
      row.estimate = run_mc(config);
    } catch (const std::exception& e) {
      row.error = e.what();
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

int default_workers() {
  if (const char* env = std::getenv("ERCONN_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= 1024) return static_cast<int>(v);
  }
  return std::max(1, static_cast<int>(std::thread::hardware_concurrency()));
}

}  // namespace erconn
