#pragma once

#include <stdexcept>
#include <string>

namespace quadlin {

/// Every failure the library reports. The kind decides the CLI exit code.
class Error : public std::runtime_error {
 public:
  enum class Kind {
    DivisionByZero,
    OrderOverflow,
    Parse,
    CapExceeded,
    NotInvertible,
    BudgetExceeded,
    InconsistentRep,
    NotACharacter,
    NotIrreducible,
    NotASubgroup,
    NoInvariantForm,
    Degenerate,
    NotGenericallyFree,
    DegenerateForm,
    FormNotInvariant,
    DimensionTooSmall,
    UnknownEntry,
    BadParams,
    Schema,
    Internal,
  };

  Error(Kind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

const char* to_string(Error::Kind kind) noexcept;

/// True for the errors that mean "the input does not describe a valid
/// smooth quadric with a generically free action".
bool is_validation_error(Error::Kind kind) noexcept;

}  // namespace quadlin
