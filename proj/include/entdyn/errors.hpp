// Error hierarchy shared by all entdyn modules.

#pragma once

#include <stdexcept>
#include <string>

namespace entdyn {

/// Base class for every error thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Incompatible matrix or state dimensions.
class DimensionMismatch : public Error {
public:
    using Error::Error;
};

/// Input fails the Hermiticity precondition.
class NotHermitian : public Error {
public:
    using Error::Error;
};

/// Iterative eigensolver exhausted its iteration budget.
class NoConvergence : public Error {
public:
    using Error::Error;
};

/// Kraus operators do not satisfy the completeness relation.
class InvalidChannel : public Error {
public:
    using Error::Error;
};

/// Dilation operator is not unitary.
class NotUnitary : public Error {
public:
    using Error::Error;
};

/// Scalar argument outside its admissible range.
class OutOfRange : public Error {
public:
    using Error::Error;
};

/// Random draw degenerated repeatedly (e.g. zero-norm Gaussian vector).
class DegenerateDraw : public Error {
public:
    using Error::Error;
};

/// Random state pair too close to define a contraction ratio.
class DegeneratePair : public Error {
public:
    using Error::Error;
};

/// Data set unusable for the requested statistic (too few points, zero spread).
class DegenerateData : public Error {
public:
    using Error::Error;
};

} // namespace entdyn
