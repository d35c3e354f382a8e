#pragma once

#include <stdexcept>
#include <string>

namespace kaonbell {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside an operation's domain (non-finite angle, ζ ∉ [0, 1], |δ| ≥ 1, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

/// p = 0 or q = 0: the mass eigenstates collapse onto a flavor state.
class DegenerateMixing : public InvalidInput {
 public:
  using InvalidInput::InvalidInput;
};

/// A bracketing root search found no sign change on its interval.
class NoRoot : public Error {
 public:
  using Error::Error;
};

}  // namespace kaonbell
