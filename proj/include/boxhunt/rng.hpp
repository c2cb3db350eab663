#pragma once

#include <bit>
#include <cstdint>

namespace boxhunt {

// boxhunt-rng-v1 — frozen contract. Identical (seed, trial, searcher) must
// reproduce the identical stream on every platform and in every future
// version; any change here is a version bump, not an edit.
//
//   key  = mix(mix(mix(seed + C0) ^ (trial + C1)) ^ (searcher + C2))
//   state = four successive splitmix64 outputs seeded from key
//
// where mix is the splitmix64 finalizer. The per-trial placement draw uses
// searcher index k (one past the last real searcher).

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline std::uint64_t splitmix64_next(std::uint64_t& state) {
  return mix64(state += 0x9E3779B97F4A7C15ULL);
}

inline std::uint64_t substream_key(std::uint64_t seed, std::uint64_t trial,
                                   std::uint64_t searcher) {
  std::uint64_t h = mix64(seed + 0x9E3779B97F4A7C15ULL);
  h = mix64(h ^ (trial + 0xD1B54A32D192ED03ULL));
  h = mix64(h ^ (searcher + 0x8CB92BA72F3D8DD7ULL));
  return h;
}

class Xoshiro256ss {
 public:
  explicit Xoshiro256ss(std::uint64_t key) {
    for (auto& w : s_) w = splitmix64_next(key);
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

  // Unbiased draw from {0, ..., n-1} by bitmask rejection.
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t mask = ~0ULL >> std::countl_zero(n - 1);
    for (;;) {
      const std::uint64_t v = next() & mask;
      if (v < n) return v;
    }
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int r) {
    return (x << r) | (x >> (64 - r));
  }
  std::uint64_t s_[4];
};

inline Xoshiro256ss substream(std::uint64_t seed, std::uint64_t trial,
                              std::uint64_t searcher) {
  return Xoshiro256ss(substream_key(seed, trial, searcher));
}

}  // namespace boxhunt
