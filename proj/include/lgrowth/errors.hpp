#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace lgrowth {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition (corner pre-image,
/// |w| < 1, non-integrable exponent, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// An iteration (series, Newton) did not reach its tolerance.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

/// A quadrature integrand produced a non-finite value.
class QuadratureError : public Error {
public:
    QuadratureError(const std::string& what, std::size_t node, std::complex<double> point)
        : Error(what), node_(node), point_(point) {}

    std::size_t node() const noexcept { return node_; }
    std::complex<double> point() const noexcept { return point_; }

private:
    std::size_t node_;
    std::complex<double> point_;
};

/// Recovered quantities break a symmetry they must have (real Laurent
/// coefficients, for instance).
class SymmetryError : public Error {
public:
    using Error::Error;
};

/// Harmonic moments requested for a domain touching the origin.
class IllDefinedError : public Error {
public:
    using Error::Error;
};

}  // namespace lgrowth
