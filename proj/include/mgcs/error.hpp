#pragma once

#include <stdexcept>
#include <string>

namespace mgcs {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed input documents (JSON/CSV syntax, unknown labels, bad numbers).
class ParseError : public Error {
public:
    using Error::Error;
};

// Structurally valid input that violates a model invariant
// (priors not summing to 1, overlapping bins, model/kind mismatch).
class ValidationError : public Error {
public:
    using Error::Error;
};

// Numeric preconditions violated at evaluation time
// (sigma <= 0, value outside all bins, missing feature, zero evidence).
class ComputeError : public Error {
public:
    using Error::Error;
};

} // namespace mgcs
