#ifndef GEOCRYSTAL_ERROR_HPP
#define GEOCRYSTAL_ERROR_HPP

#include <stdexcept>
#include <string>

namespace geocrystal {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DivisionByZero : Error {
  DivisionByZero() : Error("division by the zero function") {}
};
/// Denominator vanishes at the evaluation point.
struct PoleError : Error {
  using Error::Error;
};
struct ZeroFunctionError : Error {
  using Error::Error;
};
struct ParseError : Error {
  using Error::Error;
};
/// A leading principal minor is identically zero, so the Gauss decomposition is undefined.
struct DecompositionOutsideDomain : Error {
  using Error::Error;
};
struct TorusUndefined : Error {
  using Error::Error;
};
struct PhiVanishes : Error {
  using Error::Error;
};
struct NotPositive : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
/// The Kashiwara operator sends the element to 0 in a finite crystal.
struct Annihilated : Error {
  using Error::Error;
};

}  // namespace geocrystal

#endif
