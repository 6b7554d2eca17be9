#pragma once

#include <stdexcept>
#include <string>

namespace xyz {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The sample point is blacklisted or the nullity stayed above one.
class DegenerateSample : public Error {
 public:
  using Error::Error;
};

// The shifted block is nonsingular: no eigenvector with the predicted energy.
class NoEigenvector : public Error {
 public:
  using Error::Error;
};

// Rational or polynomial reconstruction did not stabilize or failed validation.
class ReconstructionFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace xyz
