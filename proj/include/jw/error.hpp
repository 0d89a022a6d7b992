#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace jw {

enum class ErrorKind {
  NonPrime,
  BadModulus,
  DivisionByZero,
  DescriptorMismatch,
  FieldTooSmall,
  ArityMismatch,
  IndexOutOfRange,
  ContextMismatch,
  BadParam,
  CharTwoUnsupported,
  NotADerivation,
  Infeasible,
  DimensionMismatch,
  NotRegular,
  OutOfDomain,
  DomainNotFull,
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every library failure is reported through this type; `kind()` lets callers
/// branch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace jw
