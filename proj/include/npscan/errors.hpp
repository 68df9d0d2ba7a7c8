#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace npscan {

enum class ErrorKind {
  NotPrime,
  BudgetExceeded,
  NoEmbedding,
  FieldMismatch,
  PrimeMismatch,
  CharacteristicMismatch,
  NotDivisible,
  NotAUnit,
  NotRational,
  DegreeCharClash,
  InternalDivisibility,
  BadPlace,
  MissingOrigin,
  DomainMismatch,
  InvalidArgument,
  ParseError,
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so that
/// callers (notably the CLI) can map it to an exit code without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace npscan
