#pragma once

#include <stdexcept>
#include <string>

namespace ecat {

/// Raised when a request would enumerate beyond a configured scale cap.
class ScaleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an identity that must hold does not; the message carries a witness.
class VerificationFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An Ehrhart interpolation found an empty or lower-dimensional polytope.
class DegeneratePolytope : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ecat
