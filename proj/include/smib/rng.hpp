#pragma once

#include <cstdint>

namespace smib {

// Counter-based generator: output k of stream `key` is a SplitMix64-style
// finalizer of (key, k). Output depends only on (key, counter), so streams are
// reproducible on every platform and compiler.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key, std::uint64_t counter = 0)
      : key_(key), counter_(counter) {}

  std::uint64_t next_u64();
  // Uniform in [0, 1) with 53 random bits.
  double next_unit();
  // Uniform integer in [0, bound); bound > 0. Rejection sampling, unbiased.
  std::uint64_t next_below(std::uint64_t bound);
  // Standard normal via Box-Muller (one of the pair is cached).
  double next_normal();

  std::uint64_t counter() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

// Derives independent stream keys from a user seed.
std::uint64_t derive_stream_key(std::uint64_t seed, std::uint64_t stream);

}  // namespace smib
