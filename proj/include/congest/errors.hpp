#pragma once

#include <stdexcept>
#include <string>

namespace congest {

/// Raised when caller-supplied arguments violate an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Eccentricities are undefined on a disconnected graph.
class DisconnectedGraph : public InputError {
 public:
  using InputError::InputError;
};

/// An approximate estimate fell outside the band its contract allows.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace congest
