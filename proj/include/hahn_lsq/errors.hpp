#pragma once

#include <stdexcept>
#include <string>

namespace hahn_lsq {

// Root of every error thrown by the library. The CLI maps subclasses onto
// distinct exit codes, so keep the hierarchy shallow.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of a function (e.g. log_gamma(0)).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Invalid family parameters (alpha, beta, grid size).
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Polynomial degree larger than the grid supports.
class DegreeError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class LengthError : public Error {
 public:
  using Error::Error;
};

// Degree threshold hypothesis n + 1 <= n(alpha, N) violated.
class ThresholdError : public Error {
 public:
  using Error::Error;
};

// Numerical result cannot be trusted (ill-conditioned system, lost precision).
class InstabilityError : public Error {
 public:
  using Error::Error;
};

// A function lacks the derivative bound an operation needs.
class MissingBoundError : public Error {
 public:
  using Error::Error;
};

}  // namespace hahn_lsq
