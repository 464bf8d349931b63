#pragma once

#include <functional>

#include "disclap/spectral.hpp"

namespace disclap {

/// A scalar field on the open disc x^2 + y^2 < domain_radius^2, given by an
/// arbitrary evaluation handle. The handle must be deterministic, finite on
/// the domain, and safe to call from multiple threads.
struct ScalarField2D {
  std::function<double(double, double)> eval;
  double domain_radius = 1.0;
};

/// Wrap a spectral solution as a Cartesian field on its own disc.
ScalarField2D make_field(const DiscSolution& sol);

/// 5-point stencil (u(x+h,y) + u(x-h,y) + u(x,y+h) + u(x,y-h) - 4u)/h^2;
/// O(h^2) accurate. The stencil must stay inside the domain.
double fd_laplacian(const ScalarField2D& field, double x, double y, double h);

/// (1/K) sum_k field(center + rho e^{i phi_k}) - field(center) over K
/// equispaced angles; zero (to quadrature error) exactly for harmonic fields.
double mean_value_residual(const ScalarField2D& field, double center_x,
                           double center_y, double rho, int K);

struct HarmonicReport {
  bool harmonic = false;
  double worst_residual = 0.0;
  double worst_x = 0.0;
  double worst_y = 0.0;
  double worst_rho = 0.0;
};

/// Probe mean-value residuals over a deterministic grid of centers and radii;
/// harmonic iff the worst residual stays within tol.
HarmonicReport is_harmonic(const ScalarField2D& field, double tol, int grid);

inline constexpr double kMaxPrincipleTol = 1e-9;

struct MaxPrincipleReport {
  double interior_max = 0.0;
  double interior_min = 0.0;
  double boundary_max = 0.0;
  double boundary_min = 0.0;
  bool max_ok = false;  // interior max <= boundary max + tol
  bool min_ok = false;  // interior min >= boundary min - tol

  bool pass() const { return max_ok && min_ok; }
};

/// Compare interior extrema (polar grid, r <= (1 - 1e-6) R) against boundary
/// extrema (boundary_samples points at r = R). The field handle must accept
/// evaluation at r = R.
MaxPrincipleReport max_principle_check(const ScalarField2D& field, double R,
                                       int interior_grid, int boundary_samples);

}  // namespace disclap
