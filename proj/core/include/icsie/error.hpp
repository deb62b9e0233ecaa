#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace icsie {

enum class ErrorCode {
  NotPrimePower,
  TooLarge,
  DivisionByZero,
  FieldMismatch,
  IndexOutOfRange,
  DimensionMismatch,
  InvalidArgument,
  InvalidGraph,
  ParseError,
  BudgetExceeded,
  TooSmall,
  DistanceTooSmall,
  NoSolution,
  Inconsistent,
  Degenerate,
  NotUnipartite,
  Unsupported,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

/// Malformed instance or matrix documents. `line` and `column` are 1-based
/// and zero when the failure is semantic rather than syntactic; `field`
/// names the offending JSON key when known.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column,
             std::string field, ErrorCode cause = ErrorCode::ParseError)
      : Error(ErrorCode::ParseError, message),
        line_(line),
        column_(column),
        field_(std::move(field)),
        cause_(cause) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& field() const noexcept { return field_; }
  // Underlying domain error, e.g. NotPrimePower for "q": 6.
  ErrorCode cause() const noexcept { return cause_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string field_;
  ErrorCode cause_;
};

}  // namespace icsie
