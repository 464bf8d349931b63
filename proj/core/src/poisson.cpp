#include "disclap/poisson.hpp"

#include <cmath>
#include <string>

#include "disclap/errors.hpp"
#include "disclap/summation.hpp"

namespace disclap {

namespace {

void check_interior(double R, const PolarPoint& p, const char* where) {
  if (!(R > 0.0) || !std::isfinite(R)) {
    throw InvalidArgument("radius must be positive and finite");
  }
  if (!(p.r >= 0.0) || !std::isfinite(p.r) || !std::isfinite(p.theta)) {
    throw InvalidArgument("evaluation point must be finite with r >= 0");
  }
  if (p.r >= R) {
    throw DomainError(std::string(where) + ": point r = " + std::to_string(p.r) +
                      " must lie strictly inside the disc of radius " +
                      std::to_string(R));
  }
}

}  // namespace

double poisson_kernel(double R, PolarPoint p, double phi) {
  check_interior(R, p, "poisson_kernel");
  const double num = R * R - p.r * p.r;
  const double den = R * R - 2.0 * p.r * R * std::cos(p.theta - phi) + p.r * p.r;
  return num / den;
}

int effective_quad_points(double R, PolarPoint p, int quad_points) {
  const double ratio = p.r / R;
  if (ratio <= 0.95) return quad_points;
  // the kernel peak has angular width ~(1 - r/R); capped so the cast below
  // stays defined even for points within an ulp of the boundary
  constexpr double kMaxPoints = 1 << 26;
  const double needed = std::min(std::ceil(64.0 / (1.0 - ratio)), kMaxPoints);
  const double escalated = std::max(512.0, needed);
  return static_cast<int>(std::max(static_cast<double>(quad_points), escalated));
}

double solve_poisson(const BoundarySpec& spec, double R, PolarPoint p,
                     int quad_points) {
  if (!(R > 0.0) || !std::isfinite(R)) {
    throw InvalidArgument("radius must be positive and finite");
  }
  if (quad_points < 16) throw InvalidArgument("quad_points must be >= 16");
  if (!(p.r >= 0.0) || !std::isfinite(p.r) || !std::isfinite(p.theta)) {
    throw InvalidArgument("evaluation point must be finite with r >= 0");
  }
  if (p.r >= R) {
    // The integral is singular at r = R but its limit is f(theta) for
    // continuous boundary data; serve the boundary value directly.
    if (p.r <= R * (1.0 + 1e-12)) return eval_boundary(spec, p.theta);
    throw DomainError("solve_poisson: point r = " + std::to_string(p.r) +
                      " lies outside the disc of radius " + std::to_string(R));
  }

  const int m = effective_quad_points(R, p, quad_points);
  NeumaierSum sum;
  for (int j = 0; j < m; ++j) {
    const double phi = kTwoPi * static_cast<double>(j) / static_cast<double>(m);
    sum.add(poisson_kernel(R, p, phi) * eval_boundary(spec, phi));
  }
  return sum.value() / static_cast<double>(m);
}

double kernel_mass(double R, PolarPoint p, int quad_points) {
  check_interior(R, p, "kernel_mass");
  if (quad_points < 16) throw InvalidArgument("quad_points must be >= 16");
  const int m = effective_quad_points(R, p, quad_points);
  NeumaierSum sum;
  for (int j = 0; j < m; ++j) {
    const double phi = kTwoPi * static_cast<double>(j) / static_cast<double>(m);
    sum.add(poisson_kernel(R, p, phi));
  }
  return sum.value() / static_cast<double>(m);
}

}  // namespace disclap
