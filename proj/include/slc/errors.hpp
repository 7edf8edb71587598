#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace slc {

/// Base class of every error raised by the toolkit. `kind()` is the stable
/// machine-readable name used in JSON diagnostics.
class Error : public std::runtime_error {
 public:
  Error(std::string kind, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)) {}

  const std::string& kind() const noexcept { return kind_; }

 private:
  std::string kind_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t line, std::size_t column, const std::string& message)
      : Error("SyntaxError", std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column) {}

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

#define SLC_SIMPLE_ERROR(Name)                                                        \
  class Name : public Error {                                                         \
   public:                                                                            \
    explicit Name(const std::string& message) : Error(#Name, message) {}              \
  };

SLC_SIMPLE_ERROR(DuplicateDefinition)
SLC_SIMPLE_ERROR(UnknownDefinition)
SLC_SIMPLE_ERROR(MarkerPresent)
SLC_SIMPLE_ERROR(PlainLetPresent)
SLC_SIMPLE_ERROR(InvalidPath)
SLC_SIMPLE_ERROR(NotARedex)
SLC_SIMPLE_ERROR(NotATerm)
SLC_SIMPLE_ERROR(StepCapExceeded)
SLC_SIMPLE_ERROR(MonitorViolation)
SLC_SIMPLE_ERROR(CapExceeded)
SLC_SIMPLE_ERROR(RankTooSmall)
SLC_SIMPLE_ERROR(SideConditionUnmet)
SLC_SIMPLE_ERROR(ArithmeticOverflow)
SLC_SIMPLE_ERROR(NotAListValue)
SLC_SIMPLE_ERROR(NotACountedValue)

#undef SLC_SIMPLE_ERROR

}  // namespace slc
