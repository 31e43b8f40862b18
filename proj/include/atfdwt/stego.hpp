#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "atfdwt/dwt.hpp"
#include "atfdwt/fidelity.hpp"

namespace atfdwt {

/// Embedding key. The position counter K is the coefficient index within a
/// channel's vertical subband (row-major, restarting at 0 per channel),
/// taken mod 8.
class StegoKey {
 public:
  static constexpr int kMinModulus = 2;
  static constexpr int kMaxModulus = 7;

  /// Throws InvalidKey outside [2, 7].
  explicit StegoKey(int modulus);

  int modulus() const noexcept { return modulus_; }
  friend bool operator==(const StegoKey&, const StegoKey&) = default;

 private:
  int modulus_;
};

/// p1 = ((k mod 8) mod s) mod 4, p2 = (p1 + 1) mod 4.
PositionPair position_pair(std::size_t k, const StegoKey& key);

/// Writes bit1 at p.first and bit2 at p.second; every other bit is kept.
std::uint8_t embed_pair(std::uint8_t value, int bit1, int bit2, PositionPair p);
std::pair<int, int> extract_pair(std::uint8_t value, PositionPair p);

/// (w/2)(h/2) coefficients per channel, two bits each.
std::size_t capacity_bytes(std::size_t width, std::size_t height, std::size_t channels);

/// Payload bytes as bits, MSB first.
std::vector<std::uint8_t> to_bit_stream(std::span<const std::uint8_t> bytes);
std::vector<std::uint8_t> from_bit_stream(std::span<const std::uint8_t> bits);

/// Vertical coefficients are embedded as offset-binary bytes (v + 128). Their
/// low bits are those of the 8-bit two's complement code, and the distance
/// between two bytes equals the distance between the coefficients, so the
/// fidelity adjustment can move a coefficient freely across zero.
inline constexpr int kCoefficientOffset = 128;

/// Throws CoefficientOutOfRange outside [-128, 127].
std::uint8_t coefficient_to_byte(int coefficient);
constexpr int byte_to_coefficient(std::uint8_t b) noexcept { return int{b} - kCoefficientOffset; }

struct BlockLocation {
  std::size_t channel = 0;
  std::size_t row = 0;
  std::size_t col = 0;
  friend bool operator==(const BlockLocation&, const BlockLocation&) = default;
};

struct EmbedReport {
  std::size_t payload_bytes = 0;
  std::size_t coefficients_written = 0;
  std::size_t adjustments_applied = 0;
  // Blocks with no in-range reconstruction; they will be clamped and their
  // two bits are at risk.
  std::vector<BlockLocation> clamped_blocks;
  // Largest |change| of a vertical coefficient, which is also the largest
  // pixel change relative to the unmodified reconstruction. The pipeline
  // replaces it with the measured stego-vs-cover maximum.
  int max_abs_pixel_delta = 0;
};

struct EmbedOptions {
  bool fidelity_adjustment = true;
};

struct EmbedResult {
  std::vector<SubbandPlane> subbands;
  EmbedReport report;
};

/// Number of 2-bit slots channel `c` receives when `total_pairs` slots are
/// split evenly across `channels`, in channel order.
std::pair<std::size_t, std::size_t> channel_pair_range(std::size_t total_pairs,
                                                       std::size_t channels, std::size_t c);

/// Hides `payload` in the vertical-orientation coefficients, two bits per
/// coefficient, then applies the fidelity adjustment under the constraint
/// that the block reconstructs inside [0, 255].
EmbedResult embed_payload(std::vector<SubbandPlane> subbands, std::span<const std::uint8_t> payload,
                          const StegoKey& key, const EmbedOptions& options = {});

std::vector<std::uint8_t> extract_payload(std::span<const SubbandPlane> subbands,
                                          const StegoKey& key, std::size_t n_bytes);

}  // namespace atfdwt
