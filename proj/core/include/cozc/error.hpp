#ifndef COZC_ERROR_HPP
#define COZC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace cozc {

enum class ErrorKind {
  InvalidInput,
  NotAPartialOrder,
  NotALattice,
  NotDistributive,
  NoBounds,
  FrameMismatch,
  NotComplemented,
  NotComplementedPart,
  NotAPartition,
  NotIdempotent,
  DegenerateFrame,
  EmptyInterval,
  LengthMismatch,
  SizeTooLarge,
  ParseError,
  IoError,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so that callers
/// (the CLI in particular) can map it to an exit status without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace cozc

#endif  // COZC_ERROR_HPP
