#pragma once

#include <stdexcept>
#include <string>

namespace mlbeta {

/// Base of every exception thrown by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical domain of a function.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Argument sits on a pole of the gamma function.
class PoleError : public DomainError {
public:
    using DomainError::DomainError;
};

/// Structurally invalid parameter set (wrong lengths, negative weights, ...).
class ParameterError : public Error {
public:
    using Error::Error;
};

/// Series or quadrature failed to reach its tolerance within its budget,
/// or the argument lies outside the region of convergence.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

} // namespace mlbeta
