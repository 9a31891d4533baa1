#pragma once

#include <cstdint>

namespace tmc {

// SplitMix64 finalizer, a full-avalanche 64 -> 64 bit mix.
inline constexpr std::uint64_t mix64(std::uint64_t x) {
  x ^= x >> 30;
  x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27;
  x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// Counter-style keyed hash. Every sampling decision is a pure function of
// (seed, ids...), so batch, multi-worker and streaming runs agree bit for bit
// no matter in which order they visit the edges.
inline constexpr std::uint64_t hash_key(std::uint64_t seed, std::uint64_t a) {
  return mix64((seed + kGolden) ^ mix64(a + kGolden));
}

inline constexpr std::uint64_t hash_key(std::uint64_t seed, std::uint64_t a,
                                        std::uint64_t b, std::uint64_t c) {
  std::uint64_t h = hash_key(seed, a);
  h = mix64(h ^ mix64(b + kGolden));
  h = mix64(h ^ mix64(c + kGolden));
  return h;
}

// Uniform in [0, 1), top 53 bits of the hash. Strictly below 1, so prob = 1
// accepts everything and the degenerate configs stay exact.
inline constexpr double unit_from(std::uint64_t h) {
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

inline constexpr bool coin(double prob, std::uint64_t h) {
  return unit_from(h) < prob;
}

}  // namespace tmc
