#include "disclap/netpbm.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <vector>

#include "disclap/errors.hpp"

namespace disclap {

namespace {

// header tokens separated by whitespace; '#' starts a comment to end of line
int next_header_int(std::istream& in, const std::string& path) {
  for (;;) {
    int c = in.peek();
    if (c == EOF) throw ParseError(path + ": truncated netpbm header");
    if (c == '#') {
      std::string line;
      std::getline(in, line);
      continue;
    }
    if (std::isspace(c)) {
      in.get();
      continue;
    }
    break;
  }
  int value = 0;
  if (!(in >> value)) throw ParseError(path + ": malformed netpbm header");
  return value;
}

struct Header {
  NetpbmKind kind;
  int width;
  int height;
};

Header read_header(std::istream& in, const std::string& path) {
  char p = 0, digit = 0;
  in.get(p);
  in.get(digit);
  if (!in || p != 'P') throw ParseError(path + ": not a netpbm file");
  NetpbmKind kind;
  switch (digit) {
    case '2': kind = NetpbmKind::PgmAscii; break;
    case '5': kind = NetpbmKind::PgmBinary; break;
    case '3': kind = NetpbmKind::PpmAscii; break;
    case '6': kind = NetpbmKind::PpmBinary; break;
    default: throw ParseError(path + ": unsupported netpbm magic P" +
                              std::string(1, digit));
  }
  const int w = next_header_int(in, path);
  const int h = next_header_int(in, path);
  const int maxval = next_header_int(in, path);
  if (w < 1 || h < 1) throw ParseError(path + ": bad dimensions");
  if (maxval != 255) {
    throw ParseError(path + ": only maxval 255 is supported, got " +
                     std::to_string(maxval));
  }
  return {kind, w, h};
}

std::vector<std::uint8_t> read_payload(std::istream& in, const Header& hdr,
                                       std::size_t samples_per_pixel,
                                       const std::string& path) {
  const std::size_t n =
      static_cast<std::size_t>(hdr.width) * hdr.height * samples_per_pixel;
  std::vector<std::uint8_t> bytes(n);
  if (hdr.kind == NetpbmKind::PgmBinary || hdr.kind == NetpbmKind::PpmBinary) {
    in.get();  // single whitespace after maxval
    in.read(reinterpret_cast<char*>(bytes.data()), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in.gcount()) != n) {
      throw ParseError(path + ": truncated pixel data");
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      int v;
      if (!(in >> v)) throw ParseError(path + ": truncated pixel data");
      if (v < 0 || v > 255) throw ParseError(path + ": sample out of range");
      bytes[i] = static_cast<std::uint8_t>(v);
    }
  }
  return bytes;
}

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path);
  return in;
}

}  // namespace

NetpbmKind probe_netpbm(const std::string& path) {
  auto in = open_input(path);
  return read_header(in, path).kind;
}

std::uint8_t quantize8(double v) {
  const double clamped = std::clamp(v, 0.0, 1.0);
  const long q = std::lround(clamped * 255.0);  // rounds half away from zero
  return static_cast<std::uint8_t>(std::clamp(q, 0L, 255L));
}

ImageGrid read_pgm(const std::string& path) {
  auto in = open_input(path);
  const Header hdr = read_header(in, path);
  if (hdr.kind != NetpbmKind::PgmAscii && hdr.kind != NetpbmKind::PgmBinary) {
    throw ParseError(path + ": expected a PGM (P2/P5) file");
  }
  const auto bytes = read_payload(in, hdr, 1, path);
  ImageGrid img = ImageGrid::filled(hdr.width, hdr.height, 0.0);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    img.pixels[i] = bytes[i] / 255.0;
  }
  return img;
}

void write_pgm(const ImageGrid& image, const std::string& path, bool binary) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << (binary ? "P5" : "P2") << '\n'
      << image.width << ' ' << image.height << '\n'
      << "255\n";
  if (binary) {
    std::vector<std::uint8_t> bytes(image.pixels.size());
    for (std::size_t i = 0; i < bytes.size(); ++i) bytes[i] = quantize8(image.pixels[i]);
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
  } else {
    for (int y = 0; y < image.height; ++y) {
      for (int x = 0; x < image.width; ++x) {
        out << static_cast<int>(quantize8(image.at(x, y)))
            << (x + 1 < image.width ? ' ' : '\n');
      }
    }
  }
  if (!out) throw IoError("write failed: " + path);
}

RgbImage read_ppm(const std::string& path) {
  auto in = open_input(path);
  const Header hdr = read_header(in, path);
  if (hdr.kind != NetpbmKind::PpmAscii && hdr.kind != NetpbmKind::PpmBinary) {
    throw ParseError(path + ": expected a PPM (P3/P6) file");
  }
  const auto bytes = read_payload(in, hdr, 3, path);
  RgbImage img{ImageGrid::filled(hdr.width, hdr.height, 0.0),
               ImageGrid::filled(hdr.width, hdr.height, 0.0),
               ImageGrid::filled(hdr.width, hdr.height, 0.0)};
  for (std::size_t i = 0; i < img.r.pixels.size(); ++i) {
    img.r.pixels[i] = bytes[3 * i] / 255.0;
    img.g.pixels[i] = bytes[3 * i + 1] / 255.0;
    img.b.pixels[i] = bytes[3 * i + 2] / 255.0;
  }
  return img;
}

void write_ppm(const RgbImage& image, const std::string& path, bool binary) {
  if (!image.r.same_shape(image.g) || !image.r.same_shape(image.b)) {
    throw InvalidArgument("PPM channels must share dimensions");
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path + " for writing");
  out << (binary ? "P6" : "P3") << '\n'
      << image.r.width << ' ' << image.r.height << '\n'
      << "255\n";
  const std::size_t n = image.r.pixels.size();
  if (binary) {
    std::vector<std::uint8_t> bytes(3 * n);
    for (std::size_t i = 0; i < n; ++i) {
      bytes[3 * i] = quantize8(image.r.pixels[i]);
      bytes[3 * i + 1] = quantize8(image.g.pixels[i]);
      bytes[3 * i + 2] = quantize8(image.b.pixels[i]);
    }
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      out << static_cast<int>(quantize8(image.r.pixels[i])) << ' '
          << static_cast<int>(quantize8(image.g.pixels[i])) << ' '
          << static_cast<int>(quantize8(image.b.pixels[i])) << '\n';
    }
  }
  if (!out) throw IoError("write failed: " + path);
}

Mask read_mask_pgm(const std::string& path) {
  auto in = open_input(path);
  const Header hdr = read_header(in, path);
  if (hdr.kind != NetpbmKind::PgmAscii && hdr.kind != NetpbmKind::PgmBinary) {
    throw ParseError(path + ": masks must be PGM (P2/P5)");
  }
  const auto bytes = read_payload(in, hdr, 1, path);
  Mask mask = Mask::all_known(hdr.width, hdr.height);
  for (std::size_t i = 0; i < bytes.size(); ++i) {
    if (bytes[i] == 0) {
      mask.known[i] = 0;
    } else if (bytes[i] == 255) {
      mask.known[i] = 1;
    } else {
      throw ParseError(path + ": mask pixels must be 0 (unknown) or 255 (known), got " +
                       std::to_string(static_cast<int>(bytes[i])));
    }
  }
  return mask;
}

}  // namespace disclap
