#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "disclap/boundary.hpp"
#include "disclap/geometry.hpp"
#include "disclap/rng.hpp"

namespace disclap {

enum class McMethod { WalkOnSpheres, EulerMaruyama, ExactExit };

const char* mc_method_name(McMethod m);

/// Paths are abandoned (excluded from the mean, counted in diagnostics)
/// once they exceed this many steps.
inline constexpr std::uint32_t kMcStepCap = 1000000;

struct McConfig {
  long n_paths = 100000;
  std::uint64_t seed = 0;
  McMethod method = McMethod::ExactExit;
  /// WalkOnSpheres absorption distance to the boundary, as a fraction of R.
  double eps_shell = 1e-4;
  /// EulerMaruyama time step; increments are N(0, dt) per coordinate.
  double dt = 1e-5;
};

struct McEstimate {
  double mean = 0.0;
  double std_error = 0.0;  // sample standard deviation / sqrt(n_paths)
  long n_paths = 0;        // paths contributing to the mean
  std::uint64_t seed = 0;
  double mean_steps = 0.0;  // average steps per simulated path
  long abandoned_paths = 0;
};

/// Estimate u(p) = E[f(B_tau)] for Brownian motion started at p and stopped
/// on first exit from the disc of radius R.
///
/// Each path derives its random stream from (seed, path index), and the
/// reduction over per-path values is a fixed-order pairwise sum, so the
/// estimate is bit-identical for any thread count. If exit_angles is
/// non-null it receives the exit angle of every contributing path in path
/// order.
McEstimate mc_solve(const BoundarySpec& spec, double R, PolarPoint p,
                    const McConfig& cfg, int threads = 1,
                    std::vector<double>* exit_angles = nullptr);

/// Arithmetic mean of f at the given exit angles (the hand-computable tail
/// of the estimator, split out for direct testing).
double estimate_from_exits(const BoundarySpec& spec,
                           std::span<const double> exit_angles);

/// Draw one boundary exit angle phi with the exact harmonic-measure density
/// P(r, theta - phi) / 2pi, via the closed-form inverse CDF
///   phi = theta + 2 atan( ((R - r)/(R + r)) tan(pi (U - 1/2)) ).
double sample_exact_exit(double R, PolarPoint p, StreamRng& rng);

/// One walk-on-spheres hop: uniform point on the circle of radius
/// d = R - current.r (the distance to the boundary) around the current point.
PolarPoint walk_on_spheres_step(double R, PolarPoint current, StreamRng& rng);

}  // namespace disclap
