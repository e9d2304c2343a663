#pragma once

#include <stdexcept>
#include <string>

namespace monadlab {

/// Operands live in different rings (variable count, field or order differ),
/// or a shape does not match what the operation requires.
class StructuralError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// An argument is outside the documented precondition.
class ArgumentError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A randomized search used up its retry budget.
class SearchFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The operation declines to run: a size cap or a failed existence predicate.
class Refusal : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A matrix entry is not a combination of the chosen basis forms.
class ExtractionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace monadlab
