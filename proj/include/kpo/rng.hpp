#pragma once

#include <cstdint>

namespace kpo {

// Counter-based generator: every draw is a pure function of
// (seed, stream, index, lane), so parallel consumers get identical numbers
// regardless of scheduling. SplitMix64 finalizer, two mixing rounds.
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t counter_word(std::uint64_t seed, std::uint64_t stream, std::uint64_t index,
                                  std::uint64_t lane) {
  std::uint64_t h = mix64(seed ^ (0xd1b54a32d192ed03ULL * stream));
  h = mix64(h ^ (0x9e6c63d0876a9ecdULL * index) ^ lane);
  return h;
}

// Uniform double in [0, 1), 53 mantissa bits.
inline double uniform01(std::uint64_t seed, std::uint64_t stream, std::uint64_t index,
                        std::uint64_t lane) {
  return static_cast<double>(counter_word(seed, stream, index, lane) >> 11) * 0x1.0p-53;
}

}  // namespace kpo
