#pragma once

#include <cstdint>
#include <random>

namespace forklab {

// Pinned generator. std::mt19937_64 output is fixed by the standard, and the
// conversion to [0,1) below avoids the library-specific distribution classes,
// so a seed reproduces the same stream on every conforming toolchain.
using Rng = std::mt19937_64;

inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

// Seed for worker `index` derived from a base seed (splitmix64 finalizer).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace forklab
