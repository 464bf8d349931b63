#include "disclap/grid.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "disclap/errors.hpp"

namespace disclap {

ImageGrid ImageGrid::filled(int w, int h, double value) {
  if (w < 1 || h < 1) throw InvalidArgument("image dimensions must be positive");
  ImageGrid g;
  g.width = w;
  g.height = h;
  g.pixels.assign(static_cast<std::size_t>(w) * h, value);
  return g;
}

Mask Mask::all_known(int w, int h) {
  if (w < 1 || h < 1) throw InvalidArgument("mask dimensions must be positive");
  Mask m;
  m.width = w;
  m.height = h;
  m.known.assign(static_cast<std::size_t>(w) * h, 1);
  return m;
}

Mask Mask::all_unknown(int w, int h) {
  Mask m = all_known(w, h);
  std::fill(m.known.begin(), m.known.end(), 0);
  return m;
}

const char* SolveMethod::name() const {
  switch (kind) {
    case Kind::Jacobi: return "jacobi";
    case Kind::GaussSeidel: return "gauss_seidel";
    case Kind::Sor: return "sor";
  }
  return "unknown";
}

double sor_auto_omega(int n) {
  if (n < 2) return 1.0;
  return 2.0 / (1.0 + std::sin(std::numbers::pi / n));
}

namespace {

struct Neighbors {
  int count = 0;
  std::size_t idx[4];
};

// flattened in-bounds neighbor indices per unknown pixel
std::vector<std::size_t> collect_unknowns(const Mask& mask) {
  std::vector<std::size_t> unknowns;
  for (int y = 0; y < mask.height; ++y) {
    for (int x = 0; x < mask.width; ++x) {
      if (!mask.is_known(x, y)) {
        unknowns.push_back(static_cast<std::size_t>(y) * mask.width + x);
      }
    }
  }
  return unknowns;
}

Neighbors neighbors_of(int x, int y, int w, int h) {
  Neighbors n;
  if (x > 0) n.idx[n.count++] = static_cast<std::size_t>(y) * w + (x - 1);
  if (x + 1 < w) n.idx[n.count++] = static_cast<std::size_t>(y) * w + (x + 1);
  if (y > 0) n.idx[n.count++] = static_cast<std::size_t>(y - 1) * w + x;
  if (y + 1 < h) n.idx[n.count++] = static_cast<std::size_t>(y + 1) * w + x;
  return n;
}

// Every unknown 4-connected component must contain a pixel with a known
// neighbor; flood fill and report the first anchorless component.
void check_solvable(const Mask& mask) {
  const int w = mask.width;
  const int h = mask.height;
  std::vector<std::uint8_t> seen(static_cast<std::size_t>(w) * h, 0);
  std::vector<std::size_t> stack;
  for (int y0 = 0; y0 < h; ++y0) {
    for (int x0 = 0; x0 < w; ++x0) {
      const std::size_t root = static_cast<std::size_t>(y0) * w + x0;
      if (mask.known[root] || seen[root]) continue;
      bool anchored = false;
      stack.assign(1, root);
      seen[root] = 1;
      while (!stack.empty()) {
        const std::size_t cur = stack.back();
        stack.pop_back();
        const int cx = static_cast<int>(cur % w);
        const int cy = static_cast<int>(cur / w);
        const Neighbors nb = neighbors_of(cx, cy, w, h);
        for (int k = 0; k < nb.count; ++k) {
          if (mask.known[nb.idx[k]]) {
            anchored = true;
          } else if (!seen[nb.idx[k]]) {
            seen[nb.idx[k]] = 1;
            stack.push_back(nb.idx[k]);
          }
        }
      }
      if (!anchored) throw UnsolvableMaskError(x0, y0);
    }
  }
}

double neighbor_average(const std::vector<double>& px, int x, int y, int w, int h) {
  const Neighbors nb = neighbors_of(x, y, w, h);
  double sum = 0.0;
  for (int k = 0; k < nb.count; ++k) sum += px[nb.idx[k]];
  return sum / nb.count;
}

double residual_over(const std::vector<double>& px,
                     const std::vector<std::size_t>& unknowns, int w, int h) {
  double worst = 0.0;
  for (std::size_t idx : unknowns) {
    const int x = static_cast<int>(idx % static_cast<std::size_t>(w));
    const int y = static_cast<int>(idx / static_cast<std::size_t>(w));
    worst = std::max(worst, std::abs(px[idx] - neighbor_average(px, x, y, w, h)));
  }
  return worst;
}

}  // namespace

double stencil_residual(const ImageGrid& image, const Mask& mask) {
  if (image.width != mask.width || image.height != mask.height) {
    throw InvalidArgument("image and mask dimensions differ");
  }
  return residual_over(image.pixels, collect_unknowns(mask), image.width,
                       image.height);
}

std::pair<ImageGrid, SolveReport> solve_grid(const ImageGrid& image,
                                             const Mask& mask, double tol,
                                             long max_iters, SolveMethod method) {
  if (image.width != mask.width || image.height != mask.height) {
    throw InvalidArgument("image and mask dimensions differ");
  }
  if (image.pixels.size() !=
      static_cast<std::size_t>(image.width) * image.height) {
    throw InvalidArgument("pixel buffer size does not match dimensions");
  }
  for (double v : image.pixels) {
    if (!std::isfinite(v)) throw InvalidArgument("image contains non-finite values");
  }
  if (!(tol > 0.0)) throw InvalidArgument("tol must be positive");
  if (max_iters < 1) throw InvalidArgument("max_iters must be >= 1");
  if (method.kind == SolveMethod::Kind::Sor &&
      !(method.omega > 0.0 && method.omega < 2.0)) {
    throw InvalidArgument("SOR omega must lie in (0, 2)");
  }

  SolveReport report;
  report.method = method.name();

  ImageGrid result = image;
  const std::vector<std::size_t> unknowns = collect_unknowns(mask);
  if (unknowns.empty()) {
    report.converged = true;
    return {std::move(result), std::move(report)};
  }
  check_solvable(mask);

  // start unknowns from the mean of the known pixels
  double known_sum = 0.0;
  std::size_t known_count = 0;
  for (std::size_t i = 0; i < mask.known.size(); ++i) {
    if (mask.known[i]) {
      known_sum += image.pixels[i];
      ++known_count;
    }
  }
  const double fill = known_sum / static_cast<double>(known_count);
  for (std::size_t idx : unknowns) result.pixels[idx] = fill;

  const int w = image.width;
  const int h = image.height;
  auto& px = result.pixels;
  std::vector<double> scratch;
  if (method.kind == SolveMethod::Kind::Jacobi) scratch = px;

  for (long iter = 1; iter <= max_iters; ++iter) {
    switch (method.kind) {
      case SolveMethod::Kind::Jacobi:
        for (std::size_t idx : unknowns) {
          const int x = static_cast<int>(idx % static_cast<std::size_t>(w));
          const int y = static_cast<int>(idx / static_cast<std::size_t>(w));
          scratch[idx] = neighbor_average(px, x, y, w, h);
        }
        for (std::size_t idx : unknowns) px[idx] = scratch[idx];
        break;
      case SolveMethod::Kind::GaussSeidel:
        for (std::size_t idx : unknowns) {
          const int x = static_cast<int>(idx % static_cast<std::size_t>(w));
          const int y = static_cast<int>(idx / static_cast<std::size_t>(w));
          px[idx] = neighbor_average(px, x, y, w, h);
        }
        break;
      case SolveMethod::Kind::Sor:
        for (std::size_t idx : unknowns) {
          const int x = static_cast<int>(idx % static_cast<std::size_t>(w));
          const int y = static_cast<int>(idx / static_cast<std::size_t>(w));
          px[idx] += method.omega * (neighbor_average(px, x, y, w, h) - px[idx]);
        }
        break;
    }
    report.iterations = iter;
    report.final_residual = residual_over(px, unknowns, w, h);
    if (report.final_residual <= tol) {
      report.converged = true;
      break;
    }
  }
  return {std::move(result), std::move(report)};
}

}  // namespace disclap
