#pragma once

#include <stdexcept>
#include <string>

namespace fhelm {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Invalid mesh request (too few nodes, bad spacing).
class InvalidMeshError : public Error {
public:
  using Error::Error;
};

/// Fractional exponent outside the supported range.
class InvalidExponentError : public Error {
public:
  using Error::Error;
};

/// Vector length does not match the operator or quadrature.
class DimensionError : public Error {
public:
  using Error::Error;
};

/// A diagonal entry of the preconditioner is exactly zero.
class PreconditionerDegenerateError : public Error {
public:
  using Error::Error;
};

/// Domain-parameter violation (negative frequency, sigma <= 0, ...).
class InvalidParameterError : public Error {
public:
  using Error::Error;
};

/// Surface gradient too small to form the impedance ratio.
class DegenerateGradientError : public Error {
public:
  using Error::Error;
};

/// Eigenvalue shift lands on (or too close to) k^2 in the dense oracle.
class OracleResonanceError : public Error {
public:
  using Error::Error;
};

/// Post-solve consistency check failed (the solution is not trusted).
class InvariantViolationError : public Error {
public:
  using Error::Error;
};

} // namespace fhelm
