#include <gtest/gtest.h>

#include <cmath>
#include <set>

#include "erconn/rng.hpp"

namespace erconn {
namespace {

TEST(Rng, StreamIsAFunctionOfItsSeed) {
  Xoshiro256 a(42);
  Xoshiro256 b(42);
  Xoshiro256 c(43);
  bool differs = false;
  for (int i = 0; i < 1000; ++i) {
    const auto x = a();
    EXPECT_EQ(x, b());
    differs |= x != c();
  }
  EXPECT_TRUE(differs);
}

TEST(Rng, DerivedSeedsAreDistinctAcrossIndicesAndParents) {
  std::set<std::uint64_t> seen;
  for (std::uint64_t parent = 0; parent < 50; ++parent)
    for (std::uint64_t i = 0; i < 200; ++i) seen.insert(derive_seed(parent, i));
  EXPECT_EQ(seen.size(), 50u * 200u);
}

TEST(Rng, UniformStaysInUnitInterval) {
  Xoshiro256 rng(7);
  double sum = 0.0;
  constexpr int kDraws = 200000;
  for (int i = 0; i < kDraws; ++i) {
    const double u = rng.uniform();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
  }
  // mean of U(0,1): 0.5 with sd 1/sqrt(12 * kDraws)
  EXPECT_NEAR(sum / kDraws, 0.5, 5.0 / std::sqrt(12.0 * kDraws));
}

TEST(Rng, BernoulliThresholdMatchesUniformComparison) {
  Xoshiro256 probe(99);
  for (int trial = 0; trial < 200; ++trial) {
    const double p = probe.uniform();
    const BernoulliThreshold accept(p);
    Xoshiro256 a(static_cast<std::uint64_t>(trial));
    Xoshiro256 b(static_cast<std::uint64_t>(trial));
    for (int i = 0; i < 500; ++i) ASSERT_EQ(accept(a), b.uniform() < p) << "p=" << p;
  }
}

TEST(Rng, BernoulliThresholdExtremes) {
  Xoshiro256 rng(1);
  const BernoulliThreshold never(0.0);
  const BernoulliThreshold always(1.0);
  for (int i = 0; i < 1000; ++i) {
    EXPECT_FALSE(never(rng));
    EXPECT_TRUE(always(rng));
  }
}

}  // namespace
}  // namespace erconn
