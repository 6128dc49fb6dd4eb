#pragma once

#include <stdexcept>
#include <string>

namespace bcsum {

/// Input outside an operation's mathematical domain (non-coprime moduli,
/// wrong parity, unsupported regime, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Evaluation lands on a pole of ζ, Γ, cot or 1/sin.
class PoleError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// The integration line passes too close to a pole of the Mellin integrand;
/// the message names a different M to try.
class AbscissaShiftError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// Requested accuracy cannot be reached within the configured term/height limits.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bcsum
