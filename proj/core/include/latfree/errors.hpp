#pragma once

#include <stdexcept>
#include <string>

namespace latfree {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// 64-bit integer arithmetic would wrap around. All computations are exact;
/// a result that does not fit is an error, never a silently wrapped value.
class OverflowError : public Error {
public:
  using Error::Error;
};

/// A square integer matrix turned out to be singular where a nonsingular one
/// was required (Hermite normal form, inverses).
class SingularMatrixError : public Error {
public:
  using Error::Error;
};

/// Malformed user input: unreadable simplex files, degenerate vertex sets.
class InvalidInputError : public Error {
public:
  using Error::Error;
};

/// A lattice-point scan was asked to sweep a bounding box with more integer
/// points than the configured budget allows.
class BudgetExceededError : public Error {
public:
  using Error::Error;
};

/// API misuse: non-square matrix where a square one is required, dimension
/// mismatches, out-of-range arguments.
class UsageError : public Error {
public:
  using Error::Error;
};

} // namespace latfree
