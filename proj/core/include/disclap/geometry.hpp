#pragma once

#include <cmath>
#include <numbers>

namespace disclap {

inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Point in polar coordinates; theta in radians.
struct PolarPoint {
  double r = 0.0;
  double theta = 0.0;
};

/// Reduce an angle to [0, 2*pi).
inline double wrap_angle(double theta) {
  double t = std::fmod(theta, kTwoPi);
  if (t < 0.0) t += kTwoPi;
  if (t >= kTwoPi) t = 0.0;  // fmod roundoff can land exactly on 2*pi
  return t;
}

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 to_cartesian(const PolarPoint& p) {
  return {p.r * std::cos(p.theta), p.r * std::sin(p.theta)};
}

inline PolarPoint to_polar(double x, double y) {
  return {std::hypot(x, y), std::atan2(y, x)};
}

}  // namespace disclap
