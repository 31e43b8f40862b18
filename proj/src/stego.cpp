#include "atfdwt/stego.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "atfdwt/error.hpp"

namespace atfdwt {

StegoKey::StegoKey(int modulus) : modulus_(modulus) {
  if (modulus < kMinModulus || modulus > kMaxModulus) {
    throw Error(ErrorKind::InvalidKey, "key modulus must be in [2,7], got " + std::to_string(modulus));
  }
}

PositionPair position_pair(std::size_t k, const StegoKey& key) {
  const int p1 = static_cast<int>((k % 8) % static_cast<std::size_t>(key.modulus())) % 4;
  return {p1, (p1 + 1) % 4};
}

std::uint8_t embed_pair(std::uint8_t value, int bit1, int bit2, PositionPair p) {
  validate_positions(p);
  unsigned v = value;
  v = (v & ~(1u << p.first)) | (static_cast<unsigned>(bit1 & 1) << p.first);
  v = (v & ~(1u << p.second)) | (static_cast<unsigned>(bit2 & 1) << p.second);
  return static_cast<std::uint8_t>(v);
}

std::pair<int, int> extract_pair(std::uint8_t value, PositionPair p) {
  validate_positions(p);
  return {(value >> p.first) & 1, (value >> p.second) & 1};
}

std::size_t capacity_bytes(std::size_t width, std::size_t height, std::size_t channels) {
  if (width % 2 != 0 || height % 2 != 0) {
    throw Error(ErrorKind::OddDimensions,
                std::to_string(width) + "x" + std::to_string(height) + " is not even");
  }
  return (width / 2) * (height / 2) * channels * 2 / 8;
}

std::vector<std::uint8_t> to_bit_stream(std::span<const std::uint8_t> bytes) {
  std::vector<std::uint8_t> bits;
  bits.reserve(bytes.size() * 8);
  for (auto b : bytes)
    for (int i = 7; i >= 0; --i) bits.push_back(static_cast<std::uint8_t>((b >> i) & 1));
  return bits;
}

std::vector<std::uint8_t> from_bit_stream(std::span<const std::uint8_t> bits) {
  std::vector<std::uint8_t> bytes(bits.size() / 8, 0);
  for (std::size_t i = 0; i < bytes.size() * 8; ++i)
    bytes[i / 8] = static_cast<std::uint8_t>((bytes[i / 8] << 1) | (bits[i] & 1));
  return bytes;
}

std::uint8_t coefficient_to_byte(int coefficient) {
  if (coefficient < -kCoefficientOffset || coefficient > 255 - kCoefficientOffset) {
    throw Error(ErrorKind::CoefficientOutOfRange,
                "vertical coefficient " + std::to_string(coefficient) + " outside [-128,127]");
  }
  return static_cast<std::uint8_t>(coefficient + kCoefficientOffset);
}

std::pair<std::size_t, std::size_t> channel_pair_range(std::size_t total_pairs,
                                                       std::size_t channels, std::size_t c) {
  const std::size_t share = (total_pairs + channels - 1) / channels;
  const std::size_t begin = std::min(total_pairs, c * share);
  return {begin, std::min(total_pairs, begin + share)};
}

namespace {

void check_subbands(std::span<const SubbandPlane> subbands) {
  if (subbands.empty()) throw Error(ErrorKind::DimensionMismatch, "no channels");
  const auto& ref = subbands.front().lr;
  for (const auto& sb : subbands) {
    if (!sb.lr.same_shape(ref) || !sb.ho.same_shape(ref) || !sb.vo.same_shape(ref) ||
        !sb.dg.same_shape(ref)) {
      throw Error(ErrorKind::DimensionMismatch, "subbands differ in shape");
    }
  }
}

void check_capacity(std::span<const SubbandPlane> subbands, std::size_t n_bytes) {
  const std::size_t cap = subbands.front().rows() * subbands.front().cols() * subbands.size() * 2 / 8;
  if (n_bytes > cap) {
    throw Error(ErrorKind::PayloadTooLarge,
                std::to_string(n_bytes) + " bytes exceeds capacity " + std::to_string(cap));
  }
}

}  // namespace

EmbedResult embed_payload(std::vector<SubbandPlane> subbands, std::span<const std::uint8_t> payload,
                          const StegoKey& key, const EmbedOptions& options) {
  EmbedResult result;
  auto& report = result.report;
  report.payload_bytes = payload.size();
  if (payload.empty()) {
    result.subbands = std::move(subbands);
    return result;
  }
  check_subbands(subbands);
  check_capacity(subbands, payload.size());

  const auto bits = to_bit_stream(payload);
  const std::size_t total_pairs = bits.size() / 2;
  const std::size_t cols = subbands.front().cols();

  for (std::size_t c = 0; c < subbands.size(); ++c) {
    auto& sb = subbands[c];
    const auto [begin, end] = channel_pair_range(total_pairs, subbands.size(), c);
    for (std::size_t pair = begin; pair < end; ++pair) {
      const std::size_t t = pair - begin;
      const std::size_t row = t / cols;
      const std::size_t col = t % cols;
      const PositionPair pos = position_pair(t, key);

      const int original = sb.vo(row, col);
      const std::uint8_t before = coefficient_to_byte(original);
      const std::uint8_t embedded = embed_pair(before, bits[2 * pair], bits[2 * pair + 1], pos);

      const int lr = sb.lr(row, col), ho = sb.ho(row, col), dg = sb.dg(row, col);
      auto in_range = [&](std::uint8_t b) {
        return block_in_range(reconstruct_block(lr, ho, byte_to_coefficient(b), dg));
      };

      std::uint8_t chosen = embedded;
      bool feasible = true;
      if (options.fidelity_adjustment) {
        const auto adj = adjust({before, embedded, pos}, in_range);
        chosen = adj.value;
        feasible = adj.feasible;
        if (chosen != embedded) ++report.adjustments_applied;
      } else {
        feasible = in_range(embedded);
      }
      if (!feasible) report.clamped_blocks.push_back({c, row, col});

      const int updated = byte_to_coefficient(chosen);
      report.max_abs_pixel_delta = std::max(report.max_abs_pixel_delta, std::abs(updated - original));
      sb.vo(row, col) = updated;
      ++report.coefficients_written;
    }
  }
  result.subbands = std::move(subbands);
  return result;
}

std::vector<std::uint8_t> extract_payload(std::span<const SubbandPlane> subbands,
                                          const StegoKey& key, std::size_t n_bytes) {
  if (n_bytes == 0) return {};
  check_subbands(subbands);
  check_capacity(subbands, n_bytes);

  const std::size_t total_pairs = n_bytes * 4;
  const std::size_t cols = subbands.front().cols();
  std::vector<std::uint8_t> bits(n_bytes * 8);
  for (std::size_t c = 0; c < subbands.size(); ++c) {
    const auto [begin, end] = channel_pair_range(total_pairs, subbands.size(), c);
    for (std::size_t pair = begin; pair < end; ++pair) {
      const std::size_t t = pair - begin;
      const auto [b1, b2] =
          extract_pair(coefficient_to_byte(subbands[c].vo(t / cols, t % cols)), position_pair(t, key));
      bits[2 * pair] = static_cast<std::uint8_t>(b1);
      bits[2 * pair + 1] = static_cast<std::uint8_t>(b2);
    }
  }
  return from_bit_stream(bits);
}

}  // namespace atfdwt
