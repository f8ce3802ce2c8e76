#pragma once

#include <stdexcept>
#include <string>

namespace nlbox {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Mixture or resource weights are negative or do not sum to one.
class WeightError : public Error {
 public:
  using Error::Error;
};

/// A scalar argument lies outside the domain of the formula.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A probability table violates normalization or non-negativity.
class BoxInvariantError : public Error {
 public:
  using Error::Error;
};

/// Input text could not be parsed (bad JSON shape, bad resource string).
class FormatError : public Error {
 public:
  using Error::Error;
};

/// A strategy's output functions contradict its declared kind.
class StrategyError : public Error {
 public:
  using Error::Error;
};

/// The box lies outside the convex hull of local and one-way vertices.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

/// The linear-program solver did not reach a verified optimum.
class NumericalError : public Error {
 public:
  using Error::Error;
};

/// A resource combines strategies drawn from more than one PR scope.
class ScopeError : public Error {
 public:
  using Error::Error;
};

}  // namespace nlbox
