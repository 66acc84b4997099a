#pragma once

#include <stdexcept>
#include <string>

namespace isochron {

/// Malformed user input: bad files, bad arguments, violated preconditions.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An identity that must hold by construction did not. Always a bug.
class InconsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Orbit did not return to the section within the time budget, or escaped.
class NonPeriodicError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace isochron
