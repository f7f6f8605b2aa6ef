#pragma once

#include <stdexcept>
#include <string>

namespace superfast {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatchError : public Error {
 public:
  using Error::Error;
};

class IndexError : public Error {
 public:
  using Error::Error;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class DomainError : public Error {
 public:
  using Error::Error;
};

class GeometryError : public Error {
 public:
  using Error::Error;
};

/// Overlap matrix too close to singular for symmetric orthogonalization.
class LinearDependenceError : public Error {
 public:
  using Error::Error;
};

class EmptyBasisError : public Error {
 public:
  using Error::Error;
};

/// A Hamiltonian term needs an edge the interaction graph does not contain.
class MissingEdgeError : public Error {
 public:
  using Error::Error;
};

/// An operator identity that must hold exactly was violated (upstream bug).
class AlgebraError : public Error {
 public:
  using Error::Error;
};

class SizeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(what + " (line " + std::to_string(line) + ")"), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

}  // namespace superfast
