#pragma once

#include <stdexcept>
#include <string>

namespace ffdigit {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotPrime : Error {
  using Error::Error;
};
struct NotIrreducible : Error {
  using Error::Error;
};
struct SingularBasis : Error {
  using Error::Error;
};
struct FieldTooLarge : Error {
  using Error::Error;
};
struct DivisionByZero : Error {
  using Error::Error;
};
struct DegreeOutOfRange : Error {
  using Error::Error;
};
struct CensusTooLarge : Error {
  using Error::Error;
};
struct ShapeMismatch : Error {
  using Error::Error;
};
struct TooManyCoefficientVectors : Error {
  using Error::Error;
};
struct PreconditionViolated : Error {
  using Error::Error;
};
struct VerificationFailed : Error {
  using Error::Error;
};
struct NoDependence : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};

}  // namespace ffdigit
