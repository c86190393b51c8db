#pragma once

#include <cmath>
#include <cstdint>
#include <vector>
#include <random>

namespace mltkd {

// Deterministic randomness. Everything that needs random numbers (dataset
// generation, weight init, epoch shuffling, test generators) goes through
// this wrapper so results do not depend on standard-library distribution
// internals, which are implementation-defined. The exact mappings:
//
//   engine:     std::mt19937_64 (fully specified by the standard)
//   uniform01:  (word >> 11) * 2^-53, in [0, 1)
//   normal:     Box-Muller, cosine branch only, on two uniform01 draws
//   bounded:    word % n
//   shuffle:    Fisher-Yates from the top, bounded draws
//
// Derived streams (per-epoch shuffles, per-purpose seeds) use splitmix64
// mixing so neighbouring seeds do not produce overlapping streams.

inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Seed for a named sub-stream of a root seed.
inline std::uint64_t derive_seed(std::uint64_t root, std::uint64_t stream) noexcept {
  return splitmix64(root ^ splitmix64(stream));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next_u64() { return engine_(); }

  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double normal() {
    double u1 = uniform01();
    while (u1 <= 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
  }

  /// Uniform index in [0, n). n must be > 0.
  std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    if (v.size() < 2) return;
    for (std::size_t i = v.size() - 1; i > 0; --i) {
      const std::size_t j = index(i + 1);
      std::swap(v[i], v[j]);
    }
  }

 private:
  static constexpr double kTwoPi = 6.283185307179586476925286766559;
  std::mt19937_64 engine_;
};

}  // namespace mltkd
