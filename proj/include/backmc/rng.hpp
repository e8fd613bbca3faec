#pragma once

#include <cstdint>
#include <limits>

namespace backmc {

inline constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based generator: the i-th output is mix64(key + (i+1) * gamma),
// i.e. SplitMix64 with an explicit key. Substreams derive fresh keys from
// (key, id), so any (seed, stream path) names one reproducible sequence.
//
// Satisfies UniformRandomBitGenerator, so it also plugs into <random>
// distributions.
class Rng {
 public:
  using result_type = std::uint64_t;
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;

  constexpr Rng() noexcept : Rng(0) {}
  constexpr explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) noexcept
      : key_(derive(mix64(seed ^ 0x6a09e667f3bcc909ULL), stream)) {}

  constexpr Rng substream(std::uint64_t id) const noexcept {
    Rng r;
    r.key_ = derive(key_, id);
    return r;
  }

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept {
    return std::numeric_limits<result_type>::max();
  }

  constexpr result_type operator()() noexcept { return next_u64(); }

  constexpr std::uint64_t next_u64() noexcept {
    counter_ += kGamma;
    return mix64(key_ + counter_);
  }

  // Uniform in [0, 1) with 53 random bits.
  constexpr double uniform01() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound) from exactly one draw (multiply-high;
  // bias at most bound / 2^64).
  constexpr std::uint64_t below(std::uint64_t bound) noexcept {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

  constexpr bool bernoulli(double p) noexcept { return uniform01() < p; }

  constexpr void discard(std::uint64_t k) noexcept { counter_ += k * kGamma; }

  friend constexpr bool operator==(const Rng&, const Rng&) = default;

 private:
  static constexpr std::uint64_t derive(std::uint64_t key,
                                        std::uint64_t id) noexcept {
    return mix64(key ^ mix64(id + 0x3c6ef372fe94f82bULL));
  }

  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace backmc
