#pragma once

#include <stdexcept>
#include <string>

namespace paraline {

/// Letter with a generator index outside the active rank.
class InvalidLetter : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Operands built for different ranks (or labelings) were combined.
class ContextError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// A value that must be reduced/valid was not.
class InvariantViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Operation only defined for finite rank.
class UnsupportedRank : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

/// Exhaustive check would exceed the configured word budget.
class BudgetExceeded : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed word or cycle text.
class ParseError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

}  // namespace paraline
