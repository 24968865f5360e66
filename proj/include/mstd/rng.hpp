#pragma once

// Seeded random streams for the Monte Carlo estimators.
//
// Every estimator splits its samples into a fixed number of chunks that
// depends only on the sample count. Chunk k draws from its own
// std::mt19937_64 seeded with the k-th output of SplitMix64 started at the
// master seed, so results are identical for any thread count.

#include <cstdint>
#include <random>

namespace mstd {

inline constexpr const char* kGeneratorName = "mt19937_64/splitmix64-chunks";

inline constexpr std::uint64_t kSplitMixGamma = 0x9E3779B97F4A7C15ULL;

inline constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// SplitMix64 step (Steele, Lea, Flood 2014).
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += kSplitMixGamma;
  return splitmix64_mix(state);
}

/// The (index+1)-th SplitMix64 output from state `master`: the seed of chunk `index`.
inline constexpr std::uint64_t chunk_seed(std::uint64_t master, std::uint64_t index) {
  return splitmix64_mix(master + (index + 1) * kSplitMixGamma);
}

struct ChunkPlan {
  std::int64_t chunks;
  std::int64_t per_chunk;  // the last chunk may be shorter

  std::int64_t begin(std::int64_t chunk) const { return chunk * per_chunk; }
};

inline constexpr std::int64_t kSamplesPerChunk = 1 << 16;

inline ChunkPlan plan_chunks(std::int64_t samples) {
  const std::int64_t chunks = (samples + kSamplesPerChunk - 1) / kSamplesPerChunk;
  return {chunks, kSamplesPerChunk};
}

}  // namespace mstd
