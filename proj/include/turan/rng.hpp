#ifndef TURAN_RNG_HPP
#define TURAN_RNG_HPP

#include <cstdint>

namespace turan {

/// SplitMix64 (Steele, Lea, Flood 2014). Used to expand seeds.
struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

/// xoshiro256** 1.0 (Blackman, Vigna). The exact algorithm is pinned so
/// search trajectories reproduce bit-for-bit from a config's seed.
class Xoshiro256 {
 public:
  /// Stream derivation rule: state words are four SplitMix64 outputs from
  /// state seed + stream * 0x9E3779B97F4A7C15.
  static Xoshiro256 derive(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 sm{seed + stream * 0x9E3779B97F4A7C15ULL};
    Xoshiro256 g;
    for (auto& w : g.s_) w = sm.next();
    return g;
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Unbiased integer in [0, n) by rejection.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = -n % n;
    while (true) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
  std::uint64_t s_[4] = {};
};

}  // namespace turan

#endif
