#pragma once

#include <stdexcept>
#include <string>

namespace bddil {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A literal sequence contains both x and -x.
struct InconsistentSet : Error {
  using Error::Error;
};

// A node reference does not belong to the store it was used with.
struct ForeignRef : Error {
  using Error::Error;
};

// Merging two literal sets during Reduce produced a clash; signals a
// malformed input diagram, not a user error.
struct InconsistentMerge : Error {
  using Error::Error;
};

struct IncompleteAssignment : Error {
  using Error::Error;
};

struct ParseError : Error {
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line(line) {}
  int line;
};

struct NotHorn : Error {
  using Error::Error;
};

struct UnsatInput : Error {
  using Error::Error;
};

struct ModelDoesNotSatisfy : Error {
  using Error::Error;
};

// Input to a conversion is not a diagram with maximal literal sets.
struct InputNotInf : Error {
  using Error::Error;
};

struct UniverseTooSmall : Error {
  using Error::Error;
};

struct UniverseMismatch : Error {
  using Error::Error;
};

struct TooManyVariables : Error {
  using Error::Error;
};

struct TooLarge : Error {
  using Error::Error;
};

// Cooperative cancellation: a compile exceeded the caller-supplied budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

}  // namespace bddil
