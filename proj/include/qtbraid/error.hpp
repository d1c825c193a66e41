#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qtb {

enum class ErrorCode {
  InvalidArgument,
  InvalidTriangulation,
  NotAnEdge,
  NotEmbedded,
  NotSimple,
  DegenerateConfiguration,
  NumericalDegeneracy,
  SingularWeight,
  NoSafePath,
  SimultaneousEvents,
  TrackingMismatch,
  UnsupportedParameters,
  CharacterMismatch,
  NotScalar,
  SingularDiagonal,
  NotIsomorphic,
  NotIrreducible,
  InternalCheckFailed,
  SyntaxError,
  IndexOutOfRange,
  NotPure,
  ZeroMatrix,
};

std::string_view to_string(ErrorCode code);

/// Short scientific rendering of a number for messages.
std::string format_number(double v);

/// Every failure raised by the library carries one of the codes above so
/// callers (notably the CLI) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Syntax-level failure with the 1-based position of the offending token.
class ParseError : public Error {
 public:
  ParseError(ErrorCode code, std::size_t token_position, const std::string& message)
      : Error(code, "token " + std::to_string(token_position) + ": " + message),
        position_(token_position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qtb
