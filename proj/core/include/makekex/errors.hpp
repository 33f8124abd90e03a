#pragma once

#include <stdexcept>

namespace makekex {

// Base class for every error thrown by this library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dimension mismatch (non-square input, incompatible shapes, ...).
struct ShapeError : Error {
    using Error::Error;
};

// Operands live over different moduli or different groups.
struct IncompatibleError : Error {
    using Error::Error;
};

struct DivisionByZeroError : Error {
    using Error::Error;
};

struct InvalidInputError : Error {
    using Error::Error;
};

// The linear system has no solution.
struct NoSolutionError : Error {
    using Error::Error;
};

// A matrix is not in the image of the ring embedding.
struct NotInImageError : Error {
    using Error::Error;
};

// Closure of the generators exceeded the configured order cap.
struct GroupTooLargeError : Error {
    using Error::Error;
};

// Rejection sampling hit its retry cap.
struct GenerationFailureError : Error {
    using Error::Error;
};

struct ParseError : Error {
    using Error::Error;
};

struct VerificationError : Error {
    using Error::Error;
};

} // namespace makekex
