#include "atfdwt/error.hpp"

namespace atfdwt {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::UnknownMagic: return "UnknownMagic";
    case ErrorKind::MalformedHeader: return "MalformedHeader";
    case ErrorKind::UnsupportedMaxVal: return "UnsupportedMaxVal";
    case ErrorKind::TruncatedBody: return "TruncatedBody";
    case ErrorKind::InvalidImage: return "InvalidImage";
    case ErrorKind::ChannelOutOfRange: return "ChannelOutOfRange";
    case ErrorKind::OddDimensions: return "OddDimensions";
    case ErrorKind::SamePosition: return "SamePosition";
    case ErrorKind::InvalidKey: return "InvalidKey";
    case ErrorKind::PayloadTooLarge: return "PayloadTooLarge";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::CoefficientOutOfRange: return "CoefficientOutOfRange";
    case ErrorKind::EmptyImage: return "EmptyImage";
    case ErrorKind::ZeroSignal: return "ZeroSignal";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace atfdwt
