#pragma once

#include <cstdint>
#include <span>

#include "erconn/bounds.hpp"

namespace erconn::stats {

// Two-sided 95% normal quantile.
inline constexpr double kZ95 = 1.959963984540054;

// Wilson score interval for `successes` out of `trials`.
Interval wilson_interval(std::int64_t successes, std::int64_t trials, double z = kZ95);

struct SampleMoments {
  std::int64_t count = 0;
  double mean = 0.0;
  double variance = 0.0;  // unbiased (count - 1); 0 when count < 2
  double m4 = 0.0;        // fourth central moment (biased)
};

// Two passes in index order, so the result depends only on the sequence.
SampleMoments sample_moments(std::span<const double> xs);

// Half-width of the 95% normal-approximation interval for the mean.
double mean_halfwidth(const SampleMoments& s, double z = kZ95);

// Half-width of the 95% normal-approximation interval for the variance,
// using Var[s^2] ~ (m4 - s^4 (T-3)/(T-1)) / T.
double variance_halfwidth(const SampleMoments& s, double z = kZ95);

}  // namespace erconn::stats
