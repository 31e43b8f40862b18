#include "atfdwt/ppm.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>

#include "atfdwt/error.hpp"

namespace atfdwt {

RasterImage::RasterImage(std::size_t w, std::size_t h, std::size_t c,
                         std::vector<std::uint8_t> s)
    : width(w), height(h), channels(c), samples(std::move(s)) {
  if (samples.size() != width * height * channels) {
    throw Error(ErrorKind::InvalidImage, "sample count does not match dimensions");
  }
}

namespace {

class Cursor {
 public:
  explicit Cursor(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  // Skips whitespace and '#' comments running to end of line.
  void skip_separators() {
    while (pos_ < bytes_.size()) {
      const auto ch = bytes_[pos_];
      if (ch == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n' && bytes_[pos_] != '\r') ++pos_;
      } else if (std::isspace(ch)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  // Reads an unsigned decimal token. nullopt when the next token is not numeric.
  std::optional<std::uint64_t> read_unsigned() {
    skip_separators();
    if (pos_ >= bytes_.size() || !std::isdigit(bytes_[pos_])) return std::nullopt;
    std::uint64_t value = 0;
    while (pos_ < bytes_.size() && std::isdigit(bytes_[pos_])) {
      value = value * 10 + static_cast<std::uint64_t>(bytes_[pos_] - '0');
      if (value > std::numeric_limits<std::uint32_t>::max()) return std::nullopt;
      ++pos_;
    }
    if (pos_ < bytes_.size() && !std::isspace(bytes_[pos_]) && bytes_[pos_] != '#') {
      return std::nullopt;
    }
    return value;
  }

  bool at_end() const { return pos_ >= bytes_.size(); }
  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }
  std::size_t remaining() const { return bytes_.size() - pos_; }
  std::uint8_t peek() const { return bytes_[pos_]; }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

}  // namespace

RasterImage parse_ppm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || (bytes[1] != '6' && bytes[1] != '3')) {
    throw Error(ErrorKind::UnknownMagic, "expected P6 or P3");
  }
  const bool binary = bytes[1] == '6';
  Cursor cur(bytes);
  cur.advance(2);
  if (!cur.at_end() && !std::isspace(cur.peek()) && cur.peek() != '#') {
    throw Error(ErrorKind::UnknownMagic, "expected P6 or P3");
  }

  const auto width = cur.read_unsigned();
  const auto height = cur.read_unsigned();
  if (!width || !height || *width == 0 || *height == 0) {
    throw Error(ErrorKind::MalformedHeader, "bad image dimensions");
  }
  const auto maxval = cur.read_unsigned();
  if (!maxval) throw Error(ErrorKind::MalformedHeader, "bad max value");
  if (*maxval != static_cast<std::uint64_t>(kMaxSampleValue)) {
    throw Error(ErrorKind::UnsupportedMaxVal, "only 255 is supported, got " + std::to_string(*maxval));
  }

  const std::size_t count = static_cast<std::size_t>(*width) * static_cast<std::size_t>(*height) * 3;
  std::vector<std::uint8_t> samples(count);

  if (binary) {
    // Exactly one whitespace byte separates the header from the raster.
    if (cur.at_end()) throw Error(ErrorKind::TruncatedBody, "missing raster");
    cur.advance(1);
    if (cur.remaining() < count) {
      throw Error(ErrorKind::TruncatedBody, "expected " + std::to_string(count) + " bytes, found " +
                                                std::to_string(cur.remaining()));
    }
    const auto first = bytes.begin() + static_cast<std::ptrdiff_t>(cur.pos());
    std::copy(first, first + static_cast<std::ptrdiff_t>(count), samples.begin());
  } else {
    for (std::size_t i = 0; i < count; ++i) {
      cur.skip_separators();
      if (cur.at_end()) throw Error(ErrorKind::TruncatedBody, "ran out of samples at " + std::to_string(i));
      const auto v = cur.read_unsigned();
      if (!v || *v > static_cast<std::uint64_t>(kMaxSampleValue)) {
        throw Error(ErrorKind::InvalidImage, "bad ASCII sample at index " + std::to_string(i));
      }
      samples[i] = static_cast<std::uint8_t>(*v);
    }
  }
  return RasterImage(*width, *height, 3, std::move(samples));
}

RasterImage parse_ppm(const std::string& bytes) {
  return parse_ppm(std::span(reinterpret_cast<const std::uint8_t*>(bytes.data()), bytes.size()));
}

std::vector<std::uint8_t> write_ppm(const RasterImage& img, PpmFormat format) {
  if (img.channels != 3) throw Error(ErrorKind::InvalidImage, "PPM needs 3 channels");
  if (img.samples.size() != img.width * img.height * img.channels) {
    throw Error(ErrorKind::InvalidImage, "sample count does not match dimensions");
  }
  std::string header = (format == PpmFormat::P6 ? "P6\n" : "P3\n") + std::to_string(img.width) +
                       " " + std::to_string(img.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  if (format == PpmFormat::P6) {
    out.insert(out.end(), img.samples.begin(), img.samples.end());
    return out;
  }
  std::string line;
  for (std::size_t px = 0; px < img.width * img.height; ++px) {
    line.clear();
    for (std::size_t c = 0; c < 3; ++c) {
      if (c) line += ' ';
      line += std::to_string(img.samples[px * 3 + c]);
    }
    line += '\n';
    out.insert(out.end(), line.begin(), line.end());
  }
  return out;
}

RasterImage read_ppm_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path);
  std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_ppm(std::span<const std::uint8_t>(bytes));
}

void write_ppm_file(const std::string& path, const RasterImage& img, PpmFormat format) {
  const auto bytes = write_ppm(img, format);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot create " + path);
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path);
}

IntMatrix channel_plane(const RasterImage& img, std::size_t c) {
  if (c >= img.channels) {
    throw Error(ErrorKind::ChannelOutOfRange,
                "channel " + std::to_string(c) + " of " + std::to_string(img.channels));
  }
  IntMatrix plane(img.height, img.width);
  for (std::size_t r = 0; r < img.height; ++r)
    for (std::size_t col = 0; col < img.width; ++col) plane(r, col) = img.at(r, col, c);
  return plane;
}

RasterImage interleave_planes(std::span<const IntMatrix> planes) {
  if (planes.empty()) throw Error(ErrorKind::InvalidImage, "no planes");
  const auto& first = planes.front();
  RasterImage img(first.cols(), first.rows(), planes.size());
  for (std::size_t c = 0; c < planes.size(); ++c) {
    if (!planes[c].same_shape(first)) throw Error(ErrorKind::DimensionMismatch, "planes differ in shape");
    for (std::size_t r = 0; r < first.rows(); ++r) {
      for (std::size_t col = 0; col < first.cols(); ++col) {
        const int v = planes[c](r, col);
        if (v < 0 || v > kMaxSampleValue) {
          throw Error(ErrorKind::InvalidImage, "plane value " + std::to_string(v) + " outside [0,255]");
        }
        img.at(r, col, c) = static_cast<std::uint8_t>(v);
      }
    }
  }
  return img;
}

}  // namespace atfdwt
