#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cotq {

/// Every domain failure the library can raise. The CLI maps these to exit
/// code 1 and reports `to_string(kind)` in its error JSON.
enum class ErrorKind {
  DivisionByZero,
  MalformedRational,
  ContextMismatch,
  StarUndefined,
  KeyOutOfRange,
  WrongCoalgebra,
  InvalidWeightDomain,
  NotInSubcoalgebra,
  NoDegree,
  NotHermitian,
  NotDiagonal,
  Unclassified,
  SyntaxError,
  UnknownSpec,
  InvalidParameter,
};

std::string_view to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> offset = std::nullopt)
      : std::runtime_error(message), kind_(kind), offset_(offset) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Byte offset into the parsed text, set for SyntaxError and for errors
  /// raised while parsing a specific token.
  std::optional<std::size_t> offset() const noexcept { return offset_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> offset_;
};

}  // namespace cotq
