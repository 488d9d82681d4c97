#pragma once

#include <stdexcept>
#include <string>

namespace latshift {

/// Raised when an argument lies outside an operation's domain (inadmissible
/// vertex, zero weight, duplicate parameters, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// The requested operation has no implementation for this graph model.
class UnsupportedModel : public DomainError {
 public:
  using DomainError::DomainError;
};

}  // namespace latshift
