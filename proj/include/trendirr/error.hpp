#pragma once

#include <stdexcept>
#include <string>

namespace trendirr {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Precondition violation: bad parameter value or malformed input.
class InvalidInput : public Error {
public:
    using Error::Error;
};

/// The input holds too few observations for the requested estimate.
class InsufficientData : public Error {
public:
    using Error::Error;
};

/// Plug-in KL divergence with zero smoothing where p has mass outside q's support.
class DivergenceUndefined : public Error {
public:
    using Error::Error;
};

/// A synthetic-process recursion diverged or overflowed.
class GenerationError : public Error {
public:
    using Error::Error;
};

/// Pearson correlation requested on a zero-variance sequence.
class UndefinedCorrelation : public Error {
public:
    using Error::Error;
};

}  // namespace trendirr
