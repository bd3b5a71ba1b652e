#pragma once

#include <stdexcept>
#include <string>

namespace torus_mirror {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SingularMatrix : public Error {
 public:
  using Error::Error;
};

// The period matrix itself is singular where an inverse of T is required.
class SingularPeriodMatrix : public SingularMatrix {
 public:
  using SingularMatrix::SingularMatrix;
};

class SingularOmega : public SingularMatrix {
 public:
  using SingularMatrix::SingularMatrix;
};

class NotPositiveDefinite : public Error {
 public:
  using Error::Error;
};

class NotAlternating : public Error {
 public:
  using Error::Error;
};

// An algebraic precondition such as AT' == (AT')^t fails.
class ConditionViolated : public Error {
 public:
  using Error::Error;
};

class NotHolomorphic : public ConditionViolated {
 public:
  using ConditionViolated::ConditionViolated;
};

class ConstructionFailed : public Error {
 public:
  using Error::Error;
};

class PairingMismatch : public Error {
 public:
  using Error::Error;
};

class ToleranceExceeded : public Error {
 public:
  using Error::Error;
};

class InputError : public Error {
 public:
  using Error::Error;
};

// Malformed JSON input; the message starts with the JSON pointer of the offending node.
class SchemaError : public InputError {
 public:
  SchemaError(const std::string& path, const std::string& what)
      : InputError(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

class BoundTooLarge : public InputError {
 public:
  using InputError::InputError;
};

class UnknownSuite : public InputError {
 public:
  using InputError::InputError;
};

}  // namespace torus_mirror
