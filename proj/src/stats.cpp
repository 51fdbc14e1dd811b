#include "erconn/stats.hpp"

#include <algorithm>
#include <cmath>

#include "erconn/error.hpp"

namespace erconn::stats {

Interval wilson_interval(std::int64_t successes, std::int64_t trials, double z) {
  if (trials < 1 || successes < 0 || successes > trials) {
    throw DomainError("wilson_interval needs 0 <= successes <= trials, trials >= 1");
  }
  const double t = static_cast<double>(trials);
  const double phat = successes / t;
  const double z2 = z * z;
  const double denom = 1.0 + z2 / t;
  const double centre = (phat + z2 / (2.0 * t)) / denom;
  const double half = z * std::sqrt(phat * (1.0 - phat) / t + z2 / (4.0 * t * t)) / denom;
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

SampleMoments sample_moments(std::span<const double> xs) {
  SampleMoments s;
  s.count = static_cast<std::int64_t>(xs.size());
  if (xs.empty()) return s;
  double sum = 0.0;
  for (double x : xs) sum += x;
  s.mean = sum / static_cast<double>(s.count);
  double ss = 0.0;
  double s4 = 0.0;
  for (double x : xs) {
    const double d = x - s.mean;
    const double d2 = d * d;
    ss += d2;
    s4 += d2 * d2;
  }
  s.variance = s.count > 1 ? ss / static_cast<double>(s.count - 1) : 0.0;
  s.m4 = s4 / static_cast<double>(s.count);
  return s;
}

double mean_halfwidth(const SampleMoments& s, double z) {
  if (s.count < 2) return 0.0;
  return z * std::sqrt(s.variance / static_cast<double>(s.count));
}

double variance_halfwidth(const SampleMoments& s, double z) {
  if (s.count < 4) return 0.0;
  const double t = static_cast<double>(s.count);
  const double v = s.variance;
  const double var_of_var = (s.m4 - v * v * (t - 3.0) / (t - 1.0)) / t;
  return z * std::sqrt(std::max(var_of_var, 0.0));
}

}  // namespace erconn::stats
