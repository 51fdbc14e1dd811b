#pragma once

// Empirical E[lambda2], Var[lambda2] and connectivity frequencies of unions of
// sampled G(n, p) graphs.
//
// Trial t unions N graphs; graph i of the trial is drawn from the stream
// derive_seed(derive_seed(master_seed, t), i), so a trial is reproducible on
// its own (see sample_union). Per-trial results land in a slot indexed by t and
// are reduced in trial order after all workers finish, which makes the
// estimate independent of the worker count.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "erconn/bounds.hpp"
#include "erconn/er_graph.hpp"

namespace erconn {

struct McConfig {
  ModelParams params;
  int union_size = 1;
  std::int64_t trials = 1;
  std::uint64_t master_seed = 0;
  int workers = 1;
};

// Proportions below this many trials get ci_reliable = false.
inline constexpr std::int64_t kMinReliableTrials = 30;

struct McEstimate {
  std::int64_t trials = 0;
  double mean_lambda2 = 0.0;
  double var_lambda2 = 0.0;  // unbiased
  double stderr_mean = 0.0;
  double prob_connected = 0.0;
  double prob_ge_lambda_min = 0.0;

  // 95% half-widths. Proportions use the Wilson interval (half its width);
  // the interval itself is kept alongside.
  double ci_mean_lambda2 = 0.0;
  double ci_var_lambda2 = 0.0;
  double ci_prob_connected = 0.0;
  double ci_prob_ge_lambda_min = 0.0;
  Interval wilson_connected{0.0, 0.0};
  Interval wilson_ge_lambda_min{0.0, 0.0};
  bool ci_reliable = false;

  // Trials where lambda2 > zero tolerance disagreed with breadth-first search.
  std::int64_t connectivity_mismatches = 0;

  friend bool operator==(const McEstimate&, const McEstimate&) = default;
};

// Per-trial outcome, exposed for cross-checks.
struct TrialOutcome {
  double lambda2;
  bool connected_bfs;
};

TrialOutcome run_trial(const ModelParams& params, int union_size, std::uint64_t master_seed,
                       std::uint64_t trial);

// Throws DomainError for invalid configs and CapabilityError when n exceeds
// kMaxSpectralNodes.
McEstimate run_mc(const McConfig& config);

struct SweepRow {
  McConfig config;
  std::optional<McEstimate> estimate;
  std::optional<BoundReport> bounds;
  std::string error;  // empty on success
};

// Runs each config in order; a failing config records its error and the
// sweep continues.
std::vector<SweepRow> sweep(std::span<const McConfig> configs);

// Worker count from $ERCONN_WORKERS, else hardware concurrency, at least 1.
int default_workers();

}  // namespace erconn
