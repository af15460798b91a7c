#pragma once

#include <cmath>
#include <cstdint>

#include "comgrasp/geometry.hpp"

namespace comgrasp {

/// Deterministic 64-bit stream (splitmix64) with hand-rolled uniform and
/// normal draws. <random> distributions are implementation-defined, which
/// would break byte-identical campaign outputs across standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * uniform01(); }

  /// Standard normal via Box-Muller; the paired value is cached.
  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0;
    do {
      u1 = uniform01();
    } while (u1 <= 0.0);
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * kPi * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

/// Stable derivation of independent substream seeds; the result depends only
/// on the arguments, never on draw order elsewhere.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a,
                                 std::uint64_t b = 0) {
  SplitMix64 s(base ^ (0x9E3779B97F4A7C15ull * (a + 1)) ^
               (0xC2B2AE3D27D4EB4Full * (b + 1)));
  return s.next();
}

}  // namespace comgrasp
