#pragma once

#include <array>
#include <iosfwd>
#include <string>

#include "atfdwt/matrix.hpp"

namespace atfdwt {

/// Haar filter taps. Analysis divides by 4 overall (two passes of 1/2),
/// synthesis uses unit taps so reconstruction is pure addition.
struct HaarFilter {
  static constexpr double kAnalysisLow0 = 0.5;
  static constexpr double kAnalysisLow1 = 0.5;
  static constexpr double kAnalysisHigh0 = 0.5;
  static constexpr double kAnalysisHigh1 = -0.5;
  static constexpr int kSynthesisLow0 = 1;
  static constexpr int kSynthesisLow1 = 1;
  static constexpr int kSynthesisHigh0 = 1;
  static constexpr int kSynthesisHigh1 = -1;
};

/// One level of decomposition: low resolution, horizontal, vertical and
/// diagonal orientation subbands, each (M/2) x (N/2).
struct SubbandPlane {
  IntMatrix lr;
  IntMatrix ho;
  IntMatrix vo;
  IntMatrix dg;

  std::size_t rows() const noexcept { return lr.rows(); }
  std::size_t cols() const noexcept { return lr.cols(); }

  friend bool operator==(const SubbandPlane&, const SubbandPlane&) = default;
};

/// Coefficients of a single 2x2 block.
struct BlockCoefficients {
  int lr = 0;
  int ho = 0;
  int vo = 0;
  int dg = 0;
  friend bool operator==(const BlockCoefficients&, const BlockCoefficients&) = default;
};

/// Pixels of a single 2x2 block: {x00, x01, x10, x11}.
using PixelBlock = std::array<int, 4>;

/// Floor division toward negative infinity.
constexpr int floor_div(int num, int den) noexcept {
  const int q = num / den;
  return (num % den != 0 && ((num < 0) != (den < 0))) ? q - 1 : q;
}

BlockCoefficients analyze_block(int x00, int x01, int x10, int x11) noexcept;

/// x00 = (L+H)+(V+D), x01 = (L-H)+(V-D), x10 = (L+H)-(V+D), x11 = (L-H)-(V-D).
PixelBlock reconstruct_block(int lr, int ho, int vo, int dg) noexcept;

inline bool block_in_range(const PixelBlock& px) noexcept {
  for (int v : px)
    if (v < 0 || v > 255) return false;
  return true;
}

/// Throws OddDimensions unless both dimensions are even and non-zero.
SubbandPlane forward_haar(const IntMatrix& plane);

/// Exact integer synthesis. Never clamps; callers decide what to do with
/// values outside [0, 255].
IntMatrix inverse_haar(const SubbandPlane& sb);

/// Dump format: "SUBBAND <name> <w> <h>" then h rows of w signed decimals.
void write_subband_dump(std::ostream& out, const std::string& name, const IntMatrix& m);
IntMatrix read_subband_dump(std::istream& in, std::string* name = nullptr);

}  // namespace atfdwt
