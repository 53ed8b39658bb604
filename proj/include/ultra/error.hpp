#ifndef ULTRA_ERROR_HPP_
#define ULTRA_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace ultra {

enum class ErrorKind {
  SyntaxError,
  UndeclaredVertex,
  EmptyRange,
  DuplicateId,
  BudgetExceeded,
  UniverseMismatch,
  NotHereditary,
  NotSaturatedHereditary,
  HasSinks,
  NoUnit,
  NotEventuallyConstant,
  NotRepresentable,
  InternalDisagreement,
  InvalidArgument,
};

constexpr std::string_view to_string(ErrorKind k) noexcept {
  switch (k) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::UndeclaredVertex: return "UndeclaredVertex";
    case ErrorKind::EmptyRange: return "EmptyRange";
    case ErrorKind::DuplicateId: return "DuplicateId";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::UniverseMismatch: return "UniverseMismatch";
    case ErrorKind::NotHereditary: return "NotHereditary";
    case ErrorKind::NotSaturatedHereditary: return "NotSaturatedHereditary";
    case ErrorKind::HasSinks: return "HasSinks";
    case ErrorKind::NoUnit: return "NoUnit";
    case ErrorKind::NotEventuallyConstant: return "NotEventuallyConstant";
    case ErrorKind::NotRepresentable: return "NotRepresentable";
    case ErrorKind::InternalDisagreement: return "InternalDisagreement";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct SourceSpan {
  int line = 0;
  int column = 0;
};

// Input errors carry the position of the offending token.
class ParseError : public Error {
 public:
  ParseError(ErrorKind kind, SourceSpan span, const std::string& what)
      : Error(kind, std::to_string(span.line) + ":" + std::to_string(span.column) + ": " + what),
        span_(span) {}

  SourceSpan span() const noexcept { return span_; }

 private:
  SourceSpan span_;
};

}  // namespace ultra

#endif  // ULTRA_ERROR_HPP_
