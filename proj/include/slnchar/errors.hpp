#pragma once

#include <stdexcept>
#include <string>

namespace slnchar {

/// Parameters or labels that violate a documented precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Desk-scale guards (rank, enumeration depth, oracle group size).
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input that could not be parsed into a well-formed label.
class MalformedInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An internal consistency check that must never fire.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A label-side prediction disagreed with the computed character table.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace slnchar
