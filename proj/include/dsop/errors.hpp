#pragma once

#include <stdexcept>
#include <string>

namespace dsop {

/// Base for every error the library raises.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input: unparsable numbers, bad config documents, negative weights.
class ValidationError : public Error {
 public:
  using Error::Error;
};

/// A mathematical precondition does not hold (zero polynomial, missing moments, ...).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// A linear system that must be nonsingular (or positive definite) is not.
class SingularSystemError : public Error {
 public:
  using Error::Error;
};

/// The hypothesis of a zero-localization statement is not satisfied.
class HypothesisError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

}  // namespace dsop
