#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace triblock {

enum class ErrorKind {
  InvalidGraph,         // loops, duplicate edges, out-of-range endpoints
  InconsistentRotation,
  Disconnected,
  NonPlanarEmbedding,
  Parse,
  ParameterOutOfRange,
  NotB5c,
  TooSmall,
  IdentityFailure,
  GluingMismatch,
  CapExceeded,
  InvalidName,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised by the text-format readers; `line()` is 1-based, 0 when unknown.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& message)
      : Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  int line() const noexcept { return line_; }

 private:
  int line_;
};

}  // namespace triblock
