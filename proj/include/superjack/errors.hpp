#pragma once

#include <stdexcept>
#include <string>

namespace superjack {

// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad partition strings, weight mismatches, dimension mismatches.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Evaluation of a rational function at a root of its denominator.
class PoleError : public Error {
 public:
  PoleError() : Error("pole") {}
};

// k = 0 where 1/k appears structurally.
class ZeroKError : public Error {
 public:
  ZeroKError() : Error("k must be nonzero") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

// An invariant that cannot fail for correct code did fail.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace superjack
