// SPDX-License-Identifier: Apache-2.0
//
// Counter-based random bits for reproducible parallel sampling.
//
// The generator is SplitMix64 run in counter mode. The exact scheme:
//
//   mix64(z):  z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9
//              z ^= z >> 27;  z *= 0x94D049BB133111EB
//              z ^= z >> 31;  return z            (the SplitMix64 finalizer)
//
//   key(seed, stream, sample) = mix64(mix64(mix64(seed + GAMMA)
//                                   ^ (stream + GAMMA)) ^ (sample + GAMMA))
//
//   word(k) = mix64(key + (k + 1) * GAMMA),  GAMMA = 0x9E3779B97F4A7C15
//
// word(0), word(1), ... is exactly the SplitMix64 output stream seeded
// with `key`, but any word is addressable directly, so a sample's bits
// depend only on (seed, stream, sample, counter) and never on scheduling.
#pragma once

#include <cstdint>

namespace polya {

inline constexpr std::uint64_t splitmix_gamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ULL;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBULL;
    z ^= z >> 31;
    return z;
}

constexpr std::uint64_t derive_sample_key(std::uint64_t seed, std::uint64_t stream,
                                          std::uint64_t sample) {
    std::uint64_t k = mix64(seed + splitmix_gamma);
    k = mix64(k ^ (stream + splitmix_gamma));
    k = mix64(k ^ (sample + splitmix_gamma));
    return k;
}

class CounterRng {
  public:
    explicit constexpr CounterRng(std::uint64_t key) : key_(key) {}

    constexpr std::uint64_t word(std::uint64_t counter) const {
        return mix64(key_ + (counter + 1) * splitmix_gamma);
    }

  private:
    std::uint64_t key_;
};

}  // namespace polya
