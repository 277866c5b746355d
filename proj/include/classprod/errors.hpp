#pragma once

#include <stdexcept>
#include <string>

namespace classprod {

/// Bad input: malformed text, mismatched degrees, violated hypotheses.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A configured size bound would be exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The input is one of the known pairs for which a construction has no
/// solution at all (not merely a failure of the method).
class ImpossibleCaseError : public std::runtime_error {
 public:
  ImpossibleCaseError(const std::string& what, std::string reference)
      : std::runtime_error(what), reference_(std::move(reference)) {}

  const std::string& reference() const noexcept { return reference_; }

 private:
  std::string reference_;
};

/// An internal self-check failed. Always a bug.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace classprod
