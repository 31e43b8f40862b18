#include "atfdwt/dwt.hpp"

#include <istream>
#include <ostream>

#include "atfdwt/error.hpp"

namespace atfdwt {

BlockCoefficients analyze_block(int x00, int x01, int x10, int x11) noexcept {
  const int top_sum = x00 + x01;
  const int bottom_sum = x10 + x11;
  const int top_diff = x00 - x01;
  const int bottom_diff = x10 - x11;
  return {floor_div(top_sum + bottom_sum, 4), floor_div(top_diff + bottom_diff, 4),
          floor_div(top_sum - bottom_sum, 4), floor_div(top_diff - bottom_diff, 4)};
}

PixelBlock reconstruct_block(int lr, int ho, int vo, int dg) noexcept {
  return {(lr + ho) + (vo + dg), (lr - ho) + (vo - dg), (lr + ho) - (vo + dg),
          (lr - ho) - (vo - dg)};
}

SubbandPlane forward_haar(const IntMatrix& plane) {
  if (plane.empty() || plane.rows() % 2 != 0 || plane.cols() % 2 != 0) {
    throw Error(ErrorKind::OddDimensions, std::to_string(plane.cols()) + "x" +
                                              std::to_string(plane.rows()) + " is not even");
  }
  const std::size_t rows = plane.rows() / 2;
  const std::size_t cols = plane.cols() / 2;
  SubbandPlane sb{IntMatrix(rows, cols), IntMatrix(rows, cols), IntMatrix(rows, cols),
                  IntMatrix(rows, cols)};
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const auto b = analyze_block(plane(2 * i, 2 * j), plane(2 * i, 2 * j + 1),
                                   plane(2 * i + 1, 2 * j), plane(2 * i + 1, 2 * j + 1));
      sb.lr(i, j) = b.lr;
      sb.ho(i, j) = b.ho;
      sb.vo(i, j) = b.vo;
      sb.dg(i, j) = b.dg;
    }
  }
  return sb;
}

IntMatrix inverse_haar(const SubbandPlane& sb) {
  if (!sb.lr.same_shape(sb.ho) || !sb.lr.same_shape(sb.vo) || !sb.lr.same_shape(sb.dg)) {
    throw Error(ErrorKind::DimensionMismatch, "subbands differ in shape");
  }
  IntMatrix out(sb.rows() * 2, sb.cols() * 2);
  for (std::size_t i = 0; i < sb.rows(); ++i) {
    for (std::size_t j = 0; j < sb.cols(); ++j) {
      const auto px = reconstruct_block(sb.lr(i, j), sb.ho(i, j), sb.vo(i, j), sb.dg(i, j));
      out(2 * i, 2 * j) = px[0];
      out(2 * i, 2 * j + 1) = px[1];
      out(2 * i + 1, 2 * j) = px[2];
      out(2 * i + 1, 2 * j + 1) = px[3];
    }
  }
  return out;
}

void write_subband_dump(std::ostream& out, const std::string& name, const IntMatrix& m) {
  out << "SUBBAND " << name << ' ' << m.cols() << ' ' << m.rows() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out << ' ';
      out << m(r, c);
    }
    out << '\n';
  }
}

IntMatrix read_subband_dump(std::istream& in, std::string* name) {
  std::string tag, label;
  std::size_t w = 0, h = 0;
  if (!(in >> tag >> label >> w >> h) || tag != "SUBBAND") {
    throw Error(ErrorKind::MalformedHeader, "expected SUBBAND header");
  }
  IntMatrix m(h, w);
  for (auto& v : m.values()) {
    if (!(in >> v)) throw Error(ErrorKind::TruncatedBody, "subband " + label + " is short");
  }
  if (name) *name = label;
  return m;
}

}  // namespace atfdwt
