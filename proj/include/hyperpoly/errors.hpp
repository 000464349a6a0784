#pragma once

#include <stdexcept>
#include <string>

namespace hyperpoly {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shape, degree or monicity mismatch between inputs.
class ShapeError : public Error {
public:
    using Error::Error;
};

/// A documented precondition does not hold (zero polynomial, equal inputs, ...).
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// Roots that were required to be real are not.
class NonRealRootsError : public Error {
public:
    using Error::Error;
};

/// Repeated roots, vanishing residues or common factors.
class DegenerateError : public Error {
public:
    using Error::Error;
};

/// An iterative solver hit its iteration cap.
class ConvergenceError : public Error {
public:
    using Error::Error;
};

}  // namespace hyperpoly
