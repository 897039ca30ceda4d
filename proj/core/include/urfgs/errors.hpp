#pragma once

#include <stdexcept>
#include <string>

namespace urfgs {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller handed in something that violates a precondition or invariant
/// (non-unit quaternion, empty incident set, too few sparse entries, ...).
class InvalidInputError : public Error {
public:
    using Error::Error;
};

/// On-disk data is malformed, missing, or has an incompatible version.
class DataError : public Error {
public:
    using Error::Error;
};

/// A numeric computation degenerated (singular covariance, rank-deficient
/// regression, NaN loss, ...).
class NumericError : public Error {
public:
    using Error::Error;
};

} // namespace urfgs
