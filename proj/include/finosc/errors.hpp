#pragma once

#include <stdexcept>
#include <string>

namespace finosc {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Precondition violations: bad dimension, kappa <= 0, index out of range...
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class DimensionMismatch : public InvalidArgument {
 public:
  DimensionMismatch(int lhs, int rhs)
      : InvalidArgument("dimension mismatch: " + std::to_string(lhs) + " vs " +
                        std::to_string(rhs)) {}
};

class NotHermitian : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

class ConvergenceFailure : public Error {
 public:
  using Error::Error;
};

// A spectrum that was expected to be simple has a cluster closer than the
// degeneracy gap.
class DegeneracyDetected : public Error {
 public:
  using Error::Error;
};

// Sign-alternation ordering could not be established unambiguously.
class AmbiguousSignPattern : public Error {
 public:
  using Error::Error;
};

// Gram-Schmidt weight vanishes somewhere and the graded basis collapses.
class DegenerateWeight : public Error {
 public:
  using Error::Error;
};

}  // namespace finosc
