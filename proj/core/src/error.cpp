#include "cozc/error.hpp"

namespace cozc {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::NotALattice: return "NotALattice";
    case ErrorKind::NotDistributive: return "NotDistributive";
    case ErrorKind::NoBounds: return "NoBounds";
    case ErrorKind::FrameMismatch: return "FrameMismatch";
    case ErrorKind::NotComplemented: return "NotComplemented";
    case ErrorKind::NotComplementedPart: return "NotComplementedPart";
    case ErrorKind::NotAPartition: return "NotAPartition";
    case ErrorKind::NotIdempotent: return "NotIdempotent";
    case ErrorKind::DegenerateFrame: return "DegenerateFrame";
    case ErrorKind::EmptyInterval: return "EmptyInterval";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::SizeTooLarge: return "SizeTooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace cozc
