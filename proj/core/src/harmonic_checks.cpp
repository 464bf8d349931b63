#include "disclap/harmonic_checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "disclap/errors.hpp"

namespace disclap {

ScalarField2D make_field(const DiscSolution& sol) {
  return {[sol](double x, double y) { return eval_solution(sol, to_polar(x, y)); },
          sol.radius};
}

namespace {

void check_inside(const ScalarField2D& field, double x, double y) {
  if (std::hypot(x, y) >= field.domain_radius) {
    throw DomainError("stencil point (" + std::to_string(x) + ", " +
                      std::to_string(y) + ") leaves the domain of radius " +
                      std::to_string(field.domain_radius));
  }
}

}  // namespace

double fd_laplacian(const ScalarField2D& field, double x, double y, double h) {
  if (!(h > 0.0)) throw InvalidArgument("h must be positive");
  check_inside(field, x, y);
  check_inside(field, x + h, y);
  check_inside(field, x - h, y);
  check_inside(field, x, y + h);
  check_inside(field, x, y - h);
  const double center = field.eval(x, y);
  return (field.eval(x + h, y) + field.eval(x - h, y) + field.eval(x, y + h) +
          field.eval(x, y - h) - 4.0 * center) /
         (h * h);
}

double mean_value_residual(const ScalarField2D& field, double center_x,
                           double center_y, double rho, int K) {
  if (K < 8) throw InvalidArgument("K must be >= 8");
  if (!(rho > 0.0)) throw InvalidArgument("rho must be positive");
  if (std::hypot(center_x, center_y) + rho >= field.domain_radius) {
    throw DomainError("probe circle leaves the domain");
  }
  double sum = 0.0;
  for (int k = 0; k < K; ++k) {
    const double phi = kTwoPi * static_cast<double>(k) / static_cast<double>(K);
    sum += field.eval(center_x + rho * std::cos(phi),
                      center_y + rho * std::sin(phi));
  }
  return sum / static_cast<double>(K) - field.eval(center_x, center_y);
}

HarmonicReport is_harmonic(const ScalarField2D& field, double tol, int grid) {
  if (grid < 4) throw InvalidArgument("grid must be >= 4");
  const double rd = field.domain_radius;
  constexpr int kCircleSamples = 128;
  constexpr double kRadiusFractions[] = {0.3, 0.6, 0.9};

  HarmonicReport report;
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const double x = -0.6 * rd + 1.2 * rd * static_cast<double>(i) / (grid - 1);
      const double y = -0.6 * rd + 1.2 * rd * static_cast<double>(j) / (grid - 1);
      const double room = 0.95 * rd - std::hypot(x, y);
      if (room <= 0.0) continue;
      for (double fr : kRadiusFractions) {
        const double rho = fr * room;
        const double res = std::abs(
            mean_value_residual(field, x, y, rho, kCircleSamples));
        if (res > report.worst_residual) {
          report.worst_residual = res;
          report.worst_x = x;
          report.worst_y = y;
          report.worst_rho = rho;
        }
      }
    }
  }
  report.harmonic = report.worst_residual <= tol;
  return report;
}

MaxPrincipleReport max_principle_check(const ScalarField2D& field, double R,
                                       int interior_grid, int boundary_samples) {
  if (interior_grid < 2 || boundary_samples < 4) {
    throw InvalidArgument("need interior_grid >= 2 and boundary_samples >= 4");
  }
  MaxPrincipleReport rep;
  rep.interior_max = -std::numeric_limits<double>::infinity();
  rep.interior_min = std::numeric_limits<double>::infinity();
  rep.boundary_max = rep.interior_max;
  rep.boundary_min = rep.interior_min;

  const double r_cap = (1.0 - 1e-6) * R;
  for (int i = 0; i < interior_grid; ++i) {
    const double r = r_cap * static_cast<double>(i + 1) / interior_grid;
    for (int j = 0; j < interior_grid; ++j) {
      const double th = kTwoPi * static_cast<double>(j) / interior_grid;
      const double v = field.eval(r * std::cos(th), r * std::sin(th));
      rep.interior_max = std::max(rep.interior_max, v);
      rep.interior_min = std::min(rep.interior_min, v);
    }
  }
  for (int j = 0; j < boundary_samples; ++j) {
    const double th = kTwoPi * static_cast<double>(j) / boundary_samples;
    const double v = field.eval(R * std::cos(th), R * std::sin(th));
    rep.boundary_max = std::max(rep.boundary_max, v);
    rep.boundary_min = std::min(rep.boundary_min, v);
  }
  rep.max_ok = rep.interior_max <= rep.boundary_max + kMaxPrincipleTol;
  rep.min_ok = rep.interior_min >= rep.boundary_min - kMaxPrincipleTol;
  return rep;
}

}  // namespace disclap
