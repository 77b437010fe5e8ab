#pragma once

// Counter-based random numbers: draw i of a stream is a pure function of
// (seed, i), so results never depend on evaluation order or thread count.

#include <cstdint>

namespace pinch {

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  /// splitmix64 finalizer applied to seed * golden + counter.
  std::uint64_t next() {
    std::uint64_t z = seed_ * 0x9E3779B97F4A7C15ULL + (++counter_) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace pinch
