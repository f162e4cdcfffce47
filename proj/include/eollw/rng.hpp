#pragma once

// Counter-based uniform generator. Each draw is a pure function of
// (seed, counter), so a stream can be re-created from its seed alone and
// substreams derived for parallel replicates never overlap by construction.
// The mixing function is the splitmix64 finalizer, which passes BigCrush
// as a counter mixer.

#include <cstdint>

namespace eollw {

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  // Deterministically derive an independent stream, e.g. one per replicate.
  static CounterRng substream(std::uint64_t seed, std::uint64_t stream) {
    return CounterRng(mix(seed + 0xd1b54a32d192ed03ULL * (stream + 1)));
  }

  std::uint64_t next_u64() {
    counter_ += 0x9e3779b97f4a7c15ULL;
    return mix(seed_ ^ counter_);
  }

  // Uniform on the open interval (0, 1): the half-offset keeps both
  // endpoints unreachable, so downstream logs/quantiles never see 0 or 1.
  double uniform() {
    const std::uint64_t bits = next_u64() >> 11;
    return (static_cast<double>(bits) + 0.5) * 0x1.0p-53;
  }

  // Bernoulli(p) as an indicator double (0.0 / 1.0).
  double bernoulli(double p) { return uniform() < p ? 1.0 : 0.0; }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace eollw
