#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "erconn/stats.hpp"

namespace erconn::stats {
namespace {

TEST(Wilson, Examples) {
  const Interval none = wilson_interval(0, 10);
  EXPECT_DOUBLE_EQ(none.lower, 0.0);
  EXPECT_NEAR(none.upper, 0.2775, 1e-4);
  const Interval all = wilson_interval(10, 10);
  EXPECT_NEAR(all.lower, 1.0 - 0.2775, 1e-4);
  EXPECT_DOUBLE_EQ(all.upper, 1.0);
  const Interval half = wilson_interval(500, 1000);
  EXPECT_NEAR(half.lower + half.upper, 1.0, 1e-12);
  const double z2 = kZ95 * kZ95;
  const double width = 2 * kZ95 / (1 + z2 / 1000) * std::sqrt(0.25 / 1000 + z2 / (4.0 * 1000 * 1000));
  EXPECT_NEAR(half.upper - half.lower, width, 1e-12);
}

TEST(Wilson, ContainsPointEstimate) {
  for (std::int64_t trials : {1, 7, 100, 12345}) {
    for (std::int64_t s = 0; s <= trials; s += std::max<std::int64_t>(1, trials / 9)) {
      const Interval w = wilson_interval(s, trials);
      const double phat = static_cast<double>(s) / trials;
      EXPECT_LE(w.lower, phat + 1e-15);
      EXPECT_GE(w.upper, phat - 1e-15);
      EXPECT_GE(w.lower, 0.0);
      EXPECT_LE(w.upper, 1.0);
    }
  }
}

TEST(SampleMoments, Examples) {
  const std::vector<double> xs = {1.0, 2.0, 3.0, 4.0};
  const SampleMoments m = sample_moments(xs);
  EXPECT_EQ(m.count, 4);
  EXPECT_DOUBLE_EQ(m.mean, 2.5);
  EXPECT_DOUBLE_EQ(m.variance, 5.0 / 3.0);
  // central deviations +-1.5, +-0.5
  EXPECT_DOUBLE_EQ(m.m4, (2 * std::pow(1.5, 4) + 2 * std::pow(0.5, 4)) / 4);
  EXPECT_NEAR(mean_halfwidth(m), kZ95 * std::sqrt(5.0 / 3.0 / 4), 1e-15);

  const std::vector<double> one = {7.0};
  const SampleMoments single = sample_moments(one);
  EXPECT_DOUBLE_EQ(single.mean, 7.0);
  EXPECT_DOUBLE_EQ(single.variance, 0.0);

  const std::vector<double> flat(50, 3.0);
  const SampleMoments c = sample_moments(flat);
  EXPECT_DOUBLE_EQ(c.variance, 0.0);
  EXPECT_DOUBLE_EQ(variance_halfwidth(c), 0.0);
}

}  // namespace
}  // namespace erconn::stats
