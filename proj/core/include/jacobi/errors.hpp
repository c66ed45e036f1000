#pragma once

#include <stdexcept>
#include <string>

namespace jacobi {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The Jacobi index has determinant zero; m^{-1} and everything built on it is unavailable.
class SingularIndex : public Error {
public:
  using Error::Error;
};

/// A matrix claimed to be a Jacobi index is not symmetric half-integral.
class InvalidIndex : public Error {
public:
  using Error::Error;
};

/// k - d > h/2 (or k > h/2) does not hold for the requested construction.
class HypothesisViolated : public Error {
public:
  using Error::Error;
};

class WeightMismatch : public Error {
public:
  using Error::Error;
};

/// Operands disagree on cogenus, level, value degree, weight or index.
class ShapeMismatch : public Error {
public:
  using Error::Error;
};

class DegreeMismatch : public Error {
public:
  using Error::Error;
};

class ZeroScale : public Error {
public:
  using Error::Error;
};

class DepthExceeded : public Error {
public:
  using Error::Error;
};

/// An identity that holds by construction failed; always a bug.
class InternalInvariant : public Error {
public:
  using Error::Error;
};

class ParseError : public Error {
public:
  ParseError(const std::string& where, const std::string& what)
      : Error(where + ": " + what), location_(where) {}
  const std::string& location() const noexcept { return location_; }

private:
  std::string location_;
};

class OddRank : public Error {
public:
  using Error::Error;
};

class TruncationTooLarge : public Error {
public:
  using Error::Error;
};

/// A numeric evaluation was requested outside the Jacobi half space.
class DomainError : public Error {
public:
  using Error::Error;
};

/// Reading or writing a file failed.
class IoError : public Error {
public:
  using Error::Error;
};

}  // namespace jacobi
