#pragma once

#include <cstdint>
#include <random>

namespace qgt {

// Seeded uniform stream with a fixed bit-to-double mapping, so the sample
// sequence for a given seed is identical on every platform (unlike
// std::uniform_real_distribution, whose output is implementation-defined).
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : rng_(seed) {}

  // Uniform in [0, 1).
  double next() { return static_cast<double>(rng_() >> 11) * 0x1.0p-53; }

  double next(double lo, double hi) { return lo + (hi - lo) * next(); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace qgt
