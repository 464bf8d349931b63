#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace disclap {

/// Raster intensity field, row-major, index y * width + x. Intensities are
/// nominally in [0, 1]; solvers may move iterates outside transiently and
/// clamp on output where their contract says so.
struct ImageGrid {
  int width = 0;
  int height = 0;
  std::vector<double> pixels;

  static ImageGrid filled(int w, int h, double value);

  double& at(int x, int y) { return pixels[static_cast<std::size_t>(y) * width + x]; }
  double at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }
  bool same_shape(const ImageGrid& other) const {
    return width == other.width && height == other.height;
  }
};

/// Known/unknown flags paired with an ImageGrid; true = pixel value fixed.
struct Mask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> known;

  static Mask all_known(int w, int h);
  static Mask all_unknown(int w, int h);

  bool is_known(int x, int y) const {
    return known[static_cast<std::size_t>(y) * width + x] != 0;
  }
  void set_known(int x, int y, bool v) {
    known[static_cast<std::size_t>(y) * width + x] = v ? 1 : 0;
  }
};

struct SolveMethod {
  enum class Kind { Jacobi, GaussSeidel, Sor };
  Kind kind = Kind::GaussSeidel;
  double omega = 1.5;  // SOR only

  static SolveMethod jacobi() { return {Kind::Jacobi, 1.0}; }
  static SolveMethod gauss_seidel() { return {Kind::GaussSeidel, 1.0}; }
  static SolveMethod sor(double omega) { return {Kind::Sor, omega}; }
  const char* name() const;
};

/// Near-optimal SOR relaxation factor for an n-cell Laplace problem.
double sor_auto_omega(int n);

struct SolveReport {
  long iterations = 0;
  double final_residual = 0.0;  // max |u - avg(in-bounds neighbors)| over unknowns
  bool converged = false;
  std::string method;
};

inline constexpr double kGridDefaultTol = 1e-6;
inline constexpr long kGridDefaultMaxIters = 100000;

/// Solve the discrete Dirichlet problem: unknown pixels are relaxed until
/// each equals the average of its in-bounds neighbors (image-edge unknowns
/// average the 2 or 3 existing ones, a zero-Neumann frame) to within tol.
/// Known pixels pass through bit-for-bit. Unknown pixels start from the mean
/// of the known pixels, so Jacobi/Gauss-Seidel iterates stay inside the hull
/// of the known values. Every unknown 4-connected component must touch a
/// known pixel, else UnsolvableMaskError. Gauss-Seidel and SOR sweep in
/// fixed row-major order. Non-convergence returns the best iterate with
/// converged = false.
std::pair<ImageGrid, SolveReport> solve_grid(const ImageGrid& image,
                                             const Mask& mask, double tol,
                                             long max_iters, SolveMethod method);

/// Max over unknown pixels of |u - avg(in-bounds neighbors)|.
double stencil_residual(const ImageGrid& image, const Mask& mask);

}  // namespace disclap
