#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace homalg {

enum class ErrorKind {
  FieldMismatch,
  DimensionMismatch,
  DivisionByZero,
  InvalidArgument,
  NotInvertible,
  NotAssociative,
  NotUnital,
  NotEndomorphism,
  NotHomAssociative,
  ConditionFails,
  NotBijective,
  NoWeakLeftUnit,
  NotWellDefined,
  Degenerate,
  BudgetExceeded,
  GenerationFailed,
  CapExceeded,
  Precondition,
  Postcondition,
  Parse,
};

std::string_view to_string(ErrorKind kind);

// Single exception type for the library; callers branch on kind().
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace homalg
