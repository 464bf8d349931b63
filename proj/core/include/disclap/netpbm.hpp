#pragma once

#include <cstdint>
#include <string>

#include "disclap/grid.hpp"

namespace disclap {

enum class NetpbmKind { PgmAscii, PgmBinary, PpmAscii, PpmBinary };

/// Inspect a file's magic number (P2/P5/P3/P6).
NetpbmKind probe_netpbm(const std::string& path);

struct RgbImage {
  ImageGrid r, g, b;
};

/// PGM reader (P2 or P5, maxval must be 255); intensities scaled to [0, 1].
ImageGrid read_pgm(const std::string& path);

/// PGM writer; binary P5 by default, ASCII P2 otherwise. Intensities are
/// clamped to [0, 1] and quantized by rounding half away from zero.
void write_pgm(const ImageGrid& image, const std::string& path,
               bool binary = true);

/// PPM reader/writer (P3 or P6, maxval must be 255).
RgbImage read_ppm(const std::string& path);
void write_ppm(const RgbImage& image, const std::string& path,
               bool binary = true);

/// Mask PGM: pixel value 0 = unknown, 255 = known, anything else rejected.
Mask read_mask_pgm(const std::string& path);

/// [0,1] intensity to one byte, round half away from zero.
std::uint8_t quantize8(double v);

}  // namespace disclap
