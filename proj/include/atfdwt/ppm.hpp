#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "atfdwt/matrix.hpp"

namespace atfdwt {

inline constexpr int kMaxSampleValue = 255;

/// Decoded 8-bit raster. Samples are row-major and channel-interleaved.
struct RasterImage {
  std::size_t width = 0;
  std::size_t height = 0;
  std::size_t channels = 0;
  std::vector<std::uint8_t> samples;

  RasterImage() = default;
  RasterImage(std::size_t w, std::size_t h, std::size_t c, std::uint8_t fill = 0)
      : width(w), height(h), channels(c), samples(w * h * c, fill) {}
  RasterImage(std::size_t w, std::size_t h, std::size_t c, std::vector<std::uint8_t> s);

  std::uint8_t& at(std::size_t row, std::size_t col, std::size_t ch) {
    return samples[(row * width + col) * channels + ch];
  }
  std::uint8_t at(std::size_t row, std::size_t col, std::size_t ch) const {
    return samples[(row * width + col) * channels + ch];
  }

  bool same_shape(const RasterImage& o) const noexcept {
    return width == o.width && height == o.height && channels == o.channels;
  }

  friend bool operator==(const RasterImage&, const RasterImage&) = default;
};

enum class PpmFormat { P6, P3 };

/// Parses a binary (P6) or ASCII (P3) PPM. Header comments and arbitrary
/// whitespace runs are accepted; bytes after the pixel body are ignored.
RasterImage parse_ppm(std::span<const std::uint8_t> bytes);
RasterImage parse_ppm(const std::string& bytes);

/// Canonical header "P6\n<w> <h>\n255\n". P3 bodies carry one pixel per line.
std::vector<std::uint8_t> write_ppm(const RasterImage& img, PpmFormat format = PpmFormat::P6);

RasterImage read_ppm_file(const std::string& path);
void write_ppm_file(const std::string& path, const RasterImage& img,
                    PpmFormat format = PpmFormat::P6);

/// De-interleaved copy of channel `c` as a height x width matrix.
IntMatrix channel_plane(const RasterImage& img, std::size_t c);

/// Inverse of channel_plane. Every plane must share one shape and hold
/// values in [0, 255].
RasterImage interleave_planes(std::span<const IntMatrix> planes);

}  // namespace atfdwt
