#include <doctest.h>

#include <cmath>
#include <random>

#include "atfdwt/dwt.hpp"
#include "atfdwt/error.hpp"
#include "test_support.hpp"

using namespace atfdwt;

namespace {

// Reference two-stage transform: multiply each row by the row transformation
// matrix, then each column by the column transformation matrix, using the
// analysis taps (1/2, 1/2, 1/2, -1/2) in floating point. Output uses the
// quadrant layout [lr ho; vo do].
std::vector<std::vector<double>> two_stage_transform(const IntMatrix& x) {
  const std::size_t m = x.rows(), n = x.cols();
  const double h0 = HaarFilter::kAnalysisLow0, h1 = HaarFilter::kAnalysisLow1;
  const double g0 = HaarFilter::kAnalysisHigh0, g1 = HaarFilter::kAnalysisHigh1;
  std::vector<std::vector<double>> rows(m, std::vector<double>(n));
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k < n / 2; ++k) {
      rows[r][k] = h0 * x(r, 2 * k) + h1 * x(r, 2 * k + 1);
      rows[r][n / 2 + k] = g0 * x(r, 2 * k) + g1 * x(r, 2 * k + 1);
    }
  }
  std::vector<std::vector<double>> out(m, std::vector<double>(n));
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t k = 0; k < m / 2; ++k) {
      out[k][c] = h0 * rows[2 * k][c] + h1 * rows[2 * k + 1][c];
      out[m / 2 + k][c] = g0 * rows[2 * k][c] + g1 * rows[2 * k + 1][c];
    }
  }
  return out;
}

IntMatrix quadrant(const std::vector<std::vector<double>>& t, std::size_t qr, std::size_t qc) {
  const std::size_t h = t.size() / 2, w = t[0].size() / 2;
  IntMatrix m(h, w);
  for (std::size_t r = 0; r < h; ++r)
    for (std::size_t c = 0; c < w; ++c) m(r, c) = static_cast<int>(t[qr * h + r][qc * w + c]);
  return m;
}

}  // namespace

TEST_CASE("filter taps") {
  CHECK(HaarFilter::kAnalysisLow0 == 0.5);
  CHECK(HaarFilter::kAnalysisLow1 == 0.5);
  CHECK(HaarFilter::kAnalysisHigh0 == 0.5);
  CHECK(HaarFilter::kAnalysisHigh1 == -0.5);
  CHECK(HaarFilter::kSynthesisLow0 == 1);
  CHECK(HaarFilter::kSynthesisLow1 == 1);
  CHECK(HaarFilter::kSynthesisHigh0 == 1);
  CHECK(HaarFilter::kSynthesisHigh1 == -1);
}

TEST_CASE("floor division rounds toward negative infinity") {
  CHECK(floor_div(7, 4) == 1);
  CHECK(floor_div(-1, 4) == -1);
  CHECK(floor_div(-4, 4) == -1);
  CHECK(floor_div(-5, 4) == -2);
  CHECK(floor_div(0, 4) == 0);
}

TEST_CASE("single block worked example") {
  CHECK(analyze_block(191, 187, 171, 151) == BlockCoefficients{175, 6, 14, -4});
  CHECK(reconstruct_block(175, 6, 14, -4) == PixelBlock{191, 187, 171, 151});
  CHECK(reconstruct_block(0, 0, 0, 0) == PixelBlock{0, 0, 0, 0});
  CHECK(reconstruct_block(1, 1, 1, 1) == PixelBlock{4, 0, 0, 0});
  // No clamping: x00 and x01 overshoot.
  CHECK(reconstruct_block(255, 0, 12, 0) == PixelBlock{267, 267, 243, 243});
}

TEST_CASE("4x4 decomposition") {
  const auto sb = forward_haar(testing::sample_pixels());
  CHECK(sb.lr == IntMatrix(2, 2, {175, 194, 117, 140}));
  CHECK(sb.ho == IntMatrix(2, 2, {6, 2, 4, -14}));
  CHECK(sb.vo == IntMatrix(2, 2, {14, 8, 1, 2}));
  CHECK(sb.dg == IntMatrix(2, 2, {-4, 2, 8, -12}));
  CHECK(inverse_haar(sb) == testing::sample_pixels());

  // The two-stage matrix procedure gives the same quadrants here because
  // every intermediate division is exact.
  const auto t = two_stage_transform(testing::sample_pixels());
  CHECK(quadrant(t, 0, 0) == sb.lr);
  CHECK(quadrant(t, 0, 1) == sb.ho);
  CHECK(quadrant(t, 1, 0) == sb.vo);
  CHECK(quadrant(t, 1, 1) == sb.dg);
}

TEST_CASE("constant plane has no detail") {
  const auto sb = forward_haar(IntMatrix(6, 8, 100));
  CHECK(sb.lr == IntMatrix(3, 4, 100));
  CHECK(sb.ho == IntMatrix(3, 4, 0));
  CHECK(sb.vo == IntMatrix(3, 4, 0));
  CHECK(sb.dg == IntMatrix(3, 4, 0));
  CHECK(inverse_haar(sb) == IntMatrix(6, 8, 100));
}

TEST_CASE("odd or empty planes are rejected") {
  CHECK_THROWS_AS(forward_haar(IntMatrix(3, 4)), Error);
  CHECK_THROWS_AS(forward_haar(IntMatrix(4, 5)), Error);
  CHECK_THROWS_AS(forward_haar(IntMatrix()), Error);
}

TEST_CASE("subband ranges over all 8-bit extremes") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const auto sb = forward_haar(testing::random_plane(rng, 8, 8, 0, 255));
    for (int v : sb.lr.values()) CHECK((v >= 0 && v <= 255));
    for (const auto* m : {&sb.ho, &sb.vo, &sb.dg})
      for (int v : m->values()) CHECK((v >= -128 && v <= 127));
  }
  // Extremes: checkerboards and half-planes.
  const auto sb = forward_haar(IntMatrix(2, 2, {0, 255, 255, 0}));
  CHECK(sb.dg(0, 0) == -128);
  const auto sb2 = forward_haar(IntMatrix(2, 2, {255, 0, 0, 255}));
  CHECK(sb2.dg(0, 0) == 127);
}

TEST_CASE("synthesis round trip is exact") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> low(0, 255), detail(-128, 127);
  for (int trial = 0; trial < 500; ++trial) {
    SubbandPlane sb{IntMatrix(3, 5), IntMatrix(3, 5), IntMatrix(3, 5), IntMatrix(3, 5)};
    for (std::size_t i = 0; i < sb.lr.size(); ++i) {
      sb.lr.values()[i] = low(rng);
      sb.ho.values()[i] = detail(rng);
      sb.vo.values()[i] = detail(rng);
      sb.dg.values()[i] = detail(rng);
    }
    // Holds even when reconstructions leave [0,255].
    CHECK(forward_haar(inverse_haar(sb)) == sb);
  }
}

TEST_CASE("analysis round trip error is bounded by 3") {
  std::mt19937 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const auto x = testing::random_plane(rng, 16, 16, 0, 255);
    const auto y = inverse_haar(forward_haar(x));
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(std::abs(x.values()[i] - y.values()[i]) <= 3);
  }
}

TEST_CASE("analysis round trip is exact on divisible blocks") {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> base(0, 63);
  for (int trial = 0; trial < 200; ++trial) {
    // All four pixels of a block share one residue mod 4, so every sum and
    // difference combination is a multiple of 4.
    IntMatrix x(8, 8);
    for (std::size_t i = 0; i < 4; ++i) {
      for (std::size_t j = 0; j < 4; ++j) {
        const int residue = base(rng) % 4;
        for (int k = 0; k < 4; ++k) x(2 * i + k / 2, 2 * j + k % 2) = 4 * base(rng) + residue;
      }
    }
    CHECK(inverse_haar(forward_haar(x)) == x);
  }
}

TEST_CASE("block formulas match the two-stage procedure when divisions are exact") {
  std::mt19937 rng(29);
  std::uniform_int_distribution<int> q(0, 63), res(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    IntMatrix x(4, 6);
    for (std::size_t i = 0; i < 2; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        const int r = res(rng);
        for (int k = 0; k < 4; ++k) x(2 * i + k / 2, 2 * j + k % 2) = 4 * q(rng) + r;
      }
    }
    const auto sb = forward_haar(x);
    const auto t = two_stage_transform(x);
    for (const auto& row : t)
      for (double v : row) REQUIRE(v == std::floor(v));
    CHECK(quadrant(t, 0, 0) == sb.lr);
    CHECK(quadrant(t, 0, 1) == sb.ho);
    CHECK(quadrant(t, 1, 0) == sb.vo);
    CHECK(quadrant(t, 1, 1) == sb.dg);
  }
}

TEST_CASE("subband dump round trip") {
  const auto sb = forward_haar(testing::sample_pixels());
  std::stringstream ss;
  write_subband_dump(ss, "do", sb.dg);
  CHECK(ss.str() == "SUBBAND do 2 2\n-4 2\n8 -12\n");
  std::string name;
  CHECK(read_subband_dump(ss, &name) == sb.dg);
  CHECK(name == "do");

  std::stringstream bad("NOPE x 1 1\n0\n");
  CHECK_THROWS_AS(read_subband_dump(bad), Error);
}
