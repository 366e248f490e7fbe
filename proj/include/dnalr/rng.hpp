#pragma once

#include <cstdint>

namespace dnalr {

// Pinned generator for all Monte Carlo work in this project.
//
// Each trial gets its own substream derived only from (seed, trial index):
// the stream state is initialized with two rounds of the splitmix64
// finalizer over seed and index, and every draw advances a Weyl sequence
// through the same finalizer. Tallies are therefore order-independent and
// results are identical for any trial-to-thread assignment.
class TrialRng {
 public:
  TrialRng(std::uint64_t seed, std::uint64_t trial_index)
      : state_(mix(mix(seed + kGamma) ^ mix(trial_index + kGamma2))) {}

  std::uint64_t next_u64() {
    state_ += kGamma;
    return mix(state_);
  }

  /// Uniform draw in [0, 1) with 53 random bits.
  double next_uniform() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return next_uniform() < p; }

 private:
  static constexpr std::uint64_t kGamma = 0x9e3779b97f4a7c15ULL;
  static constexpr std::uint64_t kGamma2 = 0xd1b54a32d192ed03ULL;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
};

/// Deterministic derivation of a secondary seed, for runs that need several
/// independent simulations from one user-provided seed.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  TrialRng r(seed, ~stream);
  return r.next_u64();
}

}  // namespace dnalr
