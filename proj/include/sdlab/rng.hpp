#pragma once

#include <cstdint>
#include <vector>

namespace sdlab {

// Counter-based deterministic generator built on the SplitMix64 mix function
// (Steele/Lea/Vigna). The i-th output for key k is
//
//   out(k, i) = mix64(k + (i + 1) * 0x9E3779B97F4A7C15)
//
// which makes every stream a pure function of (key, counter) and therefore
// portable across implementations that follow the same recipe. Seeds used
// anywhere in this project route through this generator; std::mt19937 and
// std::random_device are deliberately absent.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  static std::uint64_t mix64(std::uint64_t z);

  // Stable derivation of a sub-stream key, e.g. derive(seed, epoch).
  static std::uint64_t derive(std::uint64_t key, std::uint64_t tag);

  std::uint64_t next_u64();

  // Uniform in [0, 1), 53-bit resolution.
  double next_double();

  // Standard normal via Box-Muller; the spare value is cached.
  double next_normal();

  // +1 or -1 with equal probability.
  double next_rademacher();

  // Uniform integer in [0, n); unbiased (rejection sampling). n must be > 0.
  std::uint64_t next_below(std::uint64_t n);

  // Fisher-Yates permutation of {0, ..., n-1}.
  std::vector<std::size_t> permutation(std::size_t n);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace sdlab
