#pragma once

#include <cstdint>
#include <functional>

namespace atfdwt {

/// Bit positions (LSB = 0) carrying the two payload bits of one coefficient.
/// `first` receives the earlier bit of the stream.
struct PositionPair {
  int first = 0;
  int second = 1;
  friend bool operator==(const PositionPair&, const PositionPair&) = default;
};

/// Throws SamePosition when the two positions coincide, InvalidKey when
/// either lies outside [0, 3].
void validate_positions(PositionPair p);

struct AdjustInput {
  std::uint8_t original = 0;  // coefficient byte before embedding
  std::uint8_t embedded = 0;  // same byte after the payload bits were written
  PositionPair positions;
};

struct AdjustResult {
  std::uint8_t value = 0;
  bool feasible = true;  // false: no candidate passed the predicate
};

using Feasibility = std::function<bool(std::uint8_t)>;

/// Picks the byte closest to `original` among the 64 bytes that carry the
/// embedded bits at both positions and satisfy `feasible`. Ties go to the
/// smaller byte. An empty predicate accepts everything. When nothing is
/// feasible the unconstrained minimiser is returned with feasible = false.
AdjustResult adjust(const AdjustInput& in, const Feasibility& feasible = {});

/// Signed difference original - embedded, the quantity the adjustment shrinks.
inline int embedding_difference(const AdjustInput& in) noexcept {
  return static_cast<int>(in.original) - static_cast<int>(in.embedded);
}

}  // namespace atfdwt
