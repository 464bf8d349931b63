#pragma once

#include "disclap/boundary.hpp"
#include "disclap/geometry.hpp"

namespace disclap {

inline constexpr int kDefaultQuadPoints = 512;

/// Poisson kernel P(r, theta - phi) = (R^2 - r^2) / (R^2 - 2 r R cos(theta - phi) + r^2).
/// Positive for r < R; singular on the boundary diagonal, so p.r >= R throws.
double poisson_kernel(double R, PolarPoint p, double phi);

/// Quadrature size actually used for an evaluation at p. The kernel develops
/// a peak of angular width ~(1 - r/R) near the boundary, so for r/R > 0.95
/// the request escalates to at least max(512, ceil(64 / (1 - r/R))) points.
int effective_quad_points(double R, PolarPoint p, int quad_points);

/// Poisson integral u(p) = (1/2pi) \int P(r, theta - phi) f(phi) dphi by the
/// uniform trapezoid rule. For p.r = R (within 1e-12 relative) the integral
/// is singular but its limit is f(theta), so eval_boundary is returned
/// directly; beyond that the point is out of domain.
double solve_poisson(const BoundarySpec& spec, double R, PolarPoint p,
                     int quad_points = kDefaultQuadPoints);

/// (1/2pi) trapezoid sum of the kernel alone; tends to 1 as quad_points grows.
double kernel_mass(double R, PolarPoint p, int quad_points);

}  // namespace disclap
