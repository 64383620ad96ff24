#pragma once

#include <cstdint>
#include <vector>

#include "forklab/deltasync.hpp"

namespace forklab {

// Frequency of an event over independent samples.
struct Estimate {
  double value = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t hits = 0;
  double std_error = 0.0;
  // Upper bound on the bias from cutting "for all future steps" events at a
  // finite horizon; add it to the error bar.
  double horizon_error = 0.0;
  std::uint64_t seed = 0;

  // Fewer than 25 hits: the point estimate is not trustworthy.
  bool sufficient() const { return hits >= 25; }
};

struct McConfig {
  std::uint64_t samples = 100000;
  std::uint64_t seed = 1;
};

// Samples are split into fixed chunks, chunk c seeded with derive_seed(seed, c),
// so results do not depend on the number of threads.
inline constexpr std::uint64_t kChunk = 1 << 14;

// Window of k slots after a warm-up prefix (default ceil(10/eps)), followed
// by `tail` more slots (default 10k) standing in for the infinite future.
// Event: no uniquely honest slot of the window is Catalan in the whole string.
Estimate estimate_no_unique_catalan(int k, double eps, double q_h, const McConfig& cfg, int warmup = -1,
                                    int tail = -1);
// Bivalent strings; event: no two consecutive Catalan slots inside the window.
Estimate estimate_no_two_catalan(int k, double eps, const McConfig& cfg, int warmup = -1, int tail = -1);
// Initial reach from the stationary law, then k symbols of the joint (rho, mu)
// chain; event: mu >= 0 at the end.
Estimate estimate_settlement_violation(int k, double alpha, double p_h, const McConfig& cfg);
// +-1 walk falling with q = (1 + eps)/2; event: the walk is at or above
// -delta at some step >= k. Simulated for `extra` more steps (default 10k).
Estimate estimate_delta_walk(int delta, int k, double eps, const McConfig& cfg, int extra = -1);

struct ReductionFrequencies {
  std::uint64_t total = 0;  // symbols in reduce(w) with the last delta dropped
  std::uint64_t h = 0, H = 0, A = 0;
  ReducedProbs expected{};
  // (observed - expected) / sigma per symbol.
  double z_h = 0, z_H = 0, z_A = 0;

  bool within(double sigmas) const;
};

// One semi-synchronous string of length T, reduced and trimmed.
ReductionFrequencies reduction_frequencies(std::size_t T, double f, int delta, double p_A, double p_h,
                                           std::uint64_t seed, WindowRule rule = WindowRule::SilentOrAdversarial);

}  // namespace forklab
