#pragma once

#include <cstdint>
#include <random>

namespace hullselect {

/// Random stream used by every sampler. Streams are passed explicitly; there
/// is no global generator.
using Stream = std::mt19937_64;

/// SplitMix64 output function (a bijection on 64-bit words).
constexpr std::uint64_t splitmix64(std::uint64_t z) noexcept {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// Seed of replication stream `index` under `master_seed`. Distinct indices
/// give distinct seeds for a fixed master seed.
constexpr std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t index) noexcept {
  return splitmix64(master_seed + 0x9E3779B97F4A7C15ULL * (index + 1));
}

inline Stream make_stream(std::uint64_t master_seed, std::uint64_t index) {
  return Stream(stream_seed(master_seed, index));
}

/// Stream index reserved for generating the signal itself.
inline constexpr std::uint64_t kSignalStreamIndex = ~std::uint64_t{0} - 1;

}  // namespace hullselect
