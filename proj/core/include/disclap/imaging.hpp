#pragma once

#include <optional>

#include "disclap/grid.hpp"

namespace disclap {

struct InpaintConfig {
  double tol = kGridDefaultTol;
  long max_iters = kGridDefaultMaxIters;
  /// Defaults to SOR with sor_auto_omega(max(width, height)).
  std::optional<SolveMethod> method;
};

/// Fill the unknown pixels harmonically from the known ones. Known pixels
/// pass through bit-for-bit; filled pixels are clamped to [0, 1].
std::pair<ImageGrid, SolveReport> inpaint(const ImageGrid& image,
                                          const Mask& mask,
                                          const InpaintConfig& cfg = {});

/// Explicit descent on the discrete Dirichlet energy:
///   u <- u + step_size * (u_E + u_W + u_N + u_S - 4u) / 2
/// on interior pixels, border row/column pixels held fixed. step_size must
/// lie in (0, 0.25]; at the cap the roughest mode is damped to zero in one
/// step. Energy is non-increasing step to step.
ImageGrid denoise(const ImageGrid& image, int steps, double step_size);

/// Place the original pixels at stride `factor` on a fine grid of
/// ((w-1)*factor + 1) x ((h-1)*factor + 1) and solve every in-between pixel
/// harmonically. factor = 1 returns a copy.
ImageGrid upsample_harmonic(const ImageGrid& image, int factor);

/// Discrete Dirichlet energy: sum over 4-neighbor edges of squared
/// intensity differences.
double dirichlet_energy(const ImageGrid& image);

}  // namespace disclap
