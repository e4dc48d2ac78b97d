#pragma once

#include <stdexcept>
#include <string>

namespace exlag {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid parameter: excluded alpha or c, malformed rational, bad flag value.
class ParameterError : public Error {
 public:
  using Error::Error;
};

class DimensionError : public Error {
 public:
  using Error::Error;
};

/// An index outside the admissible range (n not in sigma_F, n in F_1, ...).
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Omega determinant vanished identically.
class DegeneracyError : public Error {
 public:
  using Error::Error;
};

/// Attempt to remove an element from an empty component of a pair.
class ReductionError : public Error {
 public:
  using Error::Error;
};

/// A numeric precondition failed; the message carries the certificate.
class CertificateError : public Error {
 public:
  using Error::Error;
};

/// Omega (or another denominator) too close to zero on an integration path.
class PathError : public Error {
 public:
  using Error::Error;
};

/// No admissible contour radius found.
class SearchError : public Error {
 public:
  using Error::Error;
};

}  // namespace exlag
