#pragma once

// Reproducible random streams for graph sampling.
//
// Seeds are derived with SplitMix64 (Steele, Lea & Flood 2014) and each stream
// is a xoshiro256** generator (Blackman & Vigna 2018). A stream is a pure
// function of its seed, so trial t of a Monte-Carlo run draws from
// derive_seed(master_seed, t) no matter which worker executes it.

#include <array>
#include <cmath>
#include <cstdint>

namespace erconn {

// One SplitMix64 step: advances `state` and returns the mixed output.
constexpr std::uint64_t splitmix64(std::uint64_t& state) noexcept {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Child seed for index `index` under `parent`. Distinct indices give
// statistically independent children; nesting gives a seed tree.
constexpr std::uint64_t derive_seed(std::uint64_t parent, std::uint64_t index) noexcept {
  std::uint64_t s = parent ^ (0x6a09e667f3bcc909ULL * (index + 1));
  splitmix64(s);
  return splitmix64(s);
}

class Xoshiro256 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr Xoshiro256(std::uint64_t seed) noexcept {
    std::uint64_t sm = seed;
    for (auto& word : state_) word = splitmix64(sm);
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  constexpr result_type operator()() noexcept {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

// Bernoulli(p) on the 53-bit lattice: accept(k) is exactly
// `k * 2^-53 < p` for the draw k = rng() >> 11, without the multiply.
class BernoulliThreshold {
 public:
  explicit BernoulliThreshold(double p) noexcept
      : threshold_(p <= 0.0   ? 0
                   : p >= 1.0 ? (std::uint64_t{1} << 53)
                              : static_cast<std::uint64_t>(std::ceil(p * 0x1.0p53))) {}

  bool operator()(Xoshiro256& rng) const noexcept { return (rng() >> 11) < threshold_; }

 private:
  std::uint64_t threshold_;
};

}  // namespace erconn
