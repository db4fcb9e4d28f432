#pragma once

#include <stdexcept>
#include <string>

namespace conic {

/// Base class of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An increment vector with a zero component (or the zero vector).
class InvalidIncrementError : public Error {
 public:
  using Error::Error;
};

/// A scaling map or pushforward requested at a point on the singular set.
class SingularBaseError : public Error {
 public:
  using Error::Error;
};

class SingularEvaluationError : public Error {
 public:
  using Error::Error;
};

class UndefinedDegreeError : public Error {
 public:
  using Error::Error;
};

/// Input polynomial is not a T-polynomial.
class ValidityError : public Error {
 public:
  using Error::Error;
};

/// An order that lies in the degree set where the construction degenerates.
class ResonantOrderError : public Error {
 public:
  using Error::Error;
};

class ParameterError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class ExtrapolationError : public Error {
 public:
  using Error::Error;
};

class GridError : public Error {
 public:
  using Error::Error;
};

class SupportError : public Error {
 public:
  using Error::Error;
};

class InputClassError : public Error {
 public:
  using Error::Error;
};

class SamplingError : public Error {
 public:
  using Error::Error;
};

class IntegerOrderError : public Error {
 public:
  using Error::Error;
};

class DomainRestrictionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace conic
