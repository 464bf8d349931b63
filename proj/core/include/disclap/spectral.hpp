#pragma once

#include <vector>

#include "disclap/boundary.hpp"
#include "disclap/geometry.hpp"

namespace disclap {

inline constexpr int kDefaultTruncation = 64;

/// Interior solution of the disc Dirichlet problem as a truncated series
///
///   u(r, theta) = c0 + sum_{n=1}^{N} r^n (A_n cos(n theta) + B_n sin(n theta))
///
/// with A_n = a_n / R^n, B_n = b_n / R^n, c0 = a0, so that evaluation at
/// r = R reproduces the truncated Fourier series of the boundary data.
/// Immutable; evaluation is pure and thread-safe.
struct DiscSolution {
  double radius = 1.0;
  double c0 = 0.0;
  std::vector<double> A;  // A_1 .. A_N
  std::vector<double> B;  // B_1 .. B_N

  int n_max() const { return static_cast<int>(A.size()); }
};

/// Separation-of-variables solve: expand the boundary data to order n_max
/// and scale mode n by R^-n. Throws CoefficientOverflowError naming the
/// first mode whose interior coefficient is not finite.
DiscSolution solve_spectral(const BoundarySpec& spec, double radius, int n_max);

/// Truncated series value at p; requires 0 <= p.r <= R (a relative
/// tolerance of 1e-12 above R is clamped, anything larger is out of domain).
/// At p.r = 0 the value is exactly c0.
double eval_solution(const DiscSolution& sol, PolarPoint p);

}  // namespace disclap
