#pragma once

#include <stdexcept>
#include <string>

namespace disclap {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input text: boundary expressions, CSV, netpbm, serialized solutions.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// A parameter value outside its documented range.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// An evaluation request outside the domain of validity (r > R and friends).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Iteration exhausted its budget without producing a usable result.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

/// File could not be opened, read or written.
class IoError : public Error {
 public:
  using Error::Error;
};

/// A mask contains an unknown region with no known pixel to anchor it.
/// Carries one offending pixel.
class UnsolvableMaskError : public InvalidArgument {
 public:
  UnsolvableMaskError(int x, int y)
      : InvalidArgument("unknown region containing pixel (" + std::to_string(x) +
                        ", " + std::to_string(y) +
                        ") touches no known pixel"),
        pixel_x(x),
        pixel_y(y) {}
  int pixel_x;
  int pixel_y;
};

/// A spectral coefficient a_n / R^n left the representable range.
/// Carries the first failing mode index.
class CoefficientOverflowError : public Error {
 public:
  explicit CoefficientOverflowError(int n)
      : Error("interior coefficient for mode n = " + std::to_string(n) +
              " is not finite (R^n overflow/underflow)"),
        mode(n) {}
  int mode;
};

}  // namespace disclap
