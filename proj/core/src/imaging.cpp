#include "disclap/imaging.hpp"

#include <algorithm>
#include <cmath>

#include "disclap/errors.hpp"

namespace disclap {

std::pair<ImageGrid, SolveReport> inpaint(const ImageGrid& image,
                                          const Mask& mask,
                                          const InpaintConfig& cfg) {
  const SolveMethod method = cfg.method.value_or(
      SolveMethod::sor(sor_auto_omega(std::max(image.width, image.height))));
  auto [result, report] = solve_grid(image, mask, cfg.tol, cfg.max_iters, method);
  for (int y = 0; y < result.height; ++y) {
    for (int x = 0; x < result.width; ++x) {
      if (!mask.is_known(x, y)) {
        result.at(x, y) = std::clamp(result.at(x, y), 0.0, 1.0);
      }
    }
  }
  return {std::move(result), std::move(report)};
}

ImageGrid denoise(const ImageGrid& image, int steps, double step_size) {
  if (steps < 1) throw InvalidArgument("steps must be >= 1");
  if (!(step_size > 0.0) || step_size > 0.25) {
    throw InvalidArgument("step_size must lie in (0, 0.25]");
  }
  ImageGrid cur = image;
  if (image.width < 3 || image.height < 3) return cur;  // no interior

  ImageGrid next = cur;
  for (int s = 0; s < steps; ++s) {
    for (int y = 1; y + 1 < cur.height; ++y) {
      for (int x = 1; x + 1 < cur.width; ++x) {
        const double lap = cur.at(x + 1, y) + cur.at(x - 1, y) +
                           cur.at(x, y + 1) + cur.at(x, y - 1) -
                           4.0 * cur.at(x, y);
        next.at(x, y) = cur.at(x, y) + step_size * 0.5 * lap;
      }
    }
    std::swap(cur.pixels, next.pixels);
  }
  return cur;
}

ImageGrid upsample_harmonic(const ImageGrid& image, int factor) {
  if (factor < 1) throw InvalidArgument("factor must be >= 1");
  if (factor == 1) return image;
  if (image.width < 1 || image.height < 1) {
    throw InvalidArgument("image must be non-empty");
  }

  const int fw = (image.width - 1) * factor + 1;
  const int fh = (image.height - 1) * factor + 1;
  ImageGrid fine = ImageGrid::filled(fw, fh, 0.0);
  Mask mask = Mask::all_unknown(fw, fh);
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      fine.at(x * factor, y * factor) = image.at(x, y);
      mask.set_known(x * factor, y * factor, true);
    }
  }
  InpaintConfig cfg;
  cfg.tol = 1e-8;
  auto [result, report] = inpaint(fine, mask, cfg);
  (void)report;
  return std::move(result);
}

double dirichlet_energy(const ImageGrid& image) {
  double e = 0.0;
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      if (x + 1 < image.width) {
        const double d = image.at(x + 1, y) - image.at(x, y);
        e += d * d;
      }
      if (y + 1 < image.height) {
        const double d = image.at(x, y + 1) - image.at(x, y);
        e += d * d;
      }
    }
  }
  return e;
}

}  // namespace disclap
