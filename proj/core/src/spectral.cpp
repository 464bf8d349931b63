#include "disclap/spectral.hpp"

#include <cmath>
#include <string>

#include "disclap/errors.hpp"

namespace disclap {

DiscSolution solve_spectral(const BoundarySpec& spec, double radius, int n_max) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw InvalidArgument("radius must be positive and finite");
  }
  if (n_max < 1) throw InvalidArgument("n_max must be >= 1");

  const FourierCoefficients fc = fourier_coefficients(spec, n_max);

  DiscSolution sol;
  sol.radius = radius;
  sol.c0 = fc.a0;
  sol.A.resize(static_cast<std::size_t>(n_max));
  sol.B.resize(static_cast<std::size_t>(n_max));

  double r_pow = 1.0;  // R^n by iterated multiplication
  for (int n = 1; n <= n_max; ++n) {
    r_pow *= radius;
    const std::size_t i = static_cast<std::size_t>(n - 1);
    const double an = fc.a[i];
    const double bn = fc.b[i];
    sol.A[i] = (an == 0.0) ? 0.0 : an / r_pow;
    sol.B[i] = (bn == 0.0) ? 0.0 : bn / r_pow;
    if (!std::isfinite(sol.A[i]) || !std::isfinite(sol.B[i])) {
      throw CoefficientOverflowError(n);
    }
  }
  return sol;
}

double eval_solution(const DiscSolution& sol, PolarPoint p) {
  if (!(p.r >= 0.0) || !std::isfinite(p.r) || !std::isfinite(p.theta)) {
    throw InvalidArgument("evaluation point must be finite with r >= 0");
  }
  const double limit = sol.radius * (1.0 + 1e-12);
  if (p.r > limit) {
    throw DomainError("point r = " + std::to_string(p.r) +
                      " lies outside the disc of radius " +
                      std::to_string(sol.radius));
  }
  const double r = std::min(p.r, sol.radius);
  if (r == 0.0) return sol.c0;

  double sum = sol.c0;
  double r_pow = 1.0;  // r^n by iterated multiplication
  const int n_max = sol.n_max();
  for (int n = 1; n <= n_max; ++n) {
    r_pow *= r;
    const std::size_t i = static_cast<std::size_t>(n - 1);
    if (sol.A[i] == 0.0 && sol.B[i] == 0.0) continue;
    const double arg = static_cast<double>(n) * p.theta;
    sum += r_pow * (sol.A[i] * std::cos(arg) + sol.B[i] * std::sin(arg));
  }
  return sum;
}

}  // namespace disclap
