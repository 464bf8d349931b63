#pragma once

#include <cstdint>
#include <utility>

#include "disclap/geometry.hpp"

namespace disclap {

namespace detail {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace detail

/// Deterministic splittable generator for Monte Carlo path streams.
///
/// Stream k of master seed s is the SplitMix64 sequence started at counter
/// mix(s) + (k << 32) * gamma, i.e. a disjoint 2^32-draw window of a single
/// 2^64 counter cycle. A consumer therefore sees draws that depend only on
/// (seed, stream index), never on scheduling or on how many draws other
/// streams made. Individual paths draw far fewer than 2^32 values, so
/// windows never overlap.
class StreamRng {
 public:
  StreamRng(std::uint64_t seed, std::uint64_t stream)
      : state_(detail::mix64(seed) + (stream << 32) * detail::kGolden) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += detail::kGolden);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform on [0, 1), 53 random bits.
  double next_unit() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  /// Uniform on (0, 1]; safe as a log() argument.
  double next_open_unit() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
  }

  /// Uniform on [0, 2*pi).
  double next_angle() { return kTwoPi * next_unit(); }

  /// One pair of independent N(0, sigma^2) variates (Marsaglia polar method).
  std::pair<double, double> next_gaussian_pair(double sigma) {
    double u, v, s;
    do {
      u = 2.0 * next_unit() - 1.0;
      v = 2.0 * next_unit() - 1.0;
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    const double m = sigma * std::sqrt(-2.0 * std::log(s) / s);
    return {u * m, v * m};
  }

 private:
  std::uint64_t state_;
};

}  // namespace disclap
