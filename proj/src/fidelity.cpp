#include "atfdwt/fidelity.hpp"

#include <array>
#include <cstdlib>
#include <string>

#include "atfdwt/error.hpp"

namespace atfdwt {

void validate_positions(PositionPair p) {
  if (p.first < 0 || p.first > 3 || p.second < 0 || p.second > 3) {
    throw Error(ErrorKind::InvalidKey, "bit positions must lie in [0,3], got (" +
                                           std::to_string(p.first) + "," +
                                           std::to_string(p.second) + ")");
  }
  if (p.first == p.second) {
    throw Error(ErrorKind::SamePosition, "both bits target position " + std::to_string(p.first));
  }
}

namespace {

// The six bit positions not used by the payload, ascending.
std::array<int, 6> free_positions(PositionPair p) {
  std::array<int, 6> out{};
  std::size_t n = 0;
  for (int bit = 0; bit < 8; ++bit)
    if (bit != p.first && bit != p.second) out[n++] = bit;
  return out;
}

}  // namespace

AdjustResult adjust(const AdjustInput& in, const Feasibility& feasible) {
  validate_positions(in.positions);
  const unsigned mask = (1u << in.positions.first) | (1u << in.positions.second);
  const unsigned fixed = in.embedded & mask;
  const auto slots = free_positions(in.positions);

  int best_any = -1, best_any_dist = 1 << 10;
  int best_ok = -1, best_ok_dist = 1 << 10;
  // Scattering an ascending counter into the free slots yields candidates in
  // ascending order, so strict comparison keeps the smaller value on ties.
  for (unsigned counter = 0; counter < 64; ++counter) {
    unsigned v = fixed;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (counter & (1u << i)) v |= 1u << slots[i];
    const int dist = std::abs(static_cast<int>(in.original) - static_cast<int>(v));
    if (dist < best_any_dist) {
      best_any_dist = dist;
      best_any = static_cast<int>(v);
    }
    if (dist < best_ok_dist && (!feasible || feasible(static_cast<std::uint8_t>(v)))) {
      best_ok_dist = dist;
      best_ok = static_cast<int>(v);
    }
  }
  if (best_ok < 0) return {static_cast<std::uint8_t>(best_any), false};
  return {static_cast<std::uint8_t>(best_ok), true};
}

}  // namespace atfdwt
