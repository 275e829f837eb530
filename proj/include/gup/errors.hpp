#pragma once

#include <stdexcept>
#include <string>

namespace gup {

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Invalid argument or precondition violation (non-finite input, bad range, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Quadrature or series failed to reach the requested tolerance. Carries the
/// best available estimate and its error bound.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double best_estimate, double error_bound)
        : Error(what), best_estimate(best_estimate), error_bound(error_bound) {}

    double best_estimate;
    double error_bound;
};

/// A state could not be normalized (non-convergent norm integral) or lacks
/// the data needed for the requested operation.
class InvalidStateError : public Error {
public:
    using Error::Error;
};

/// Root finding for a packet calibration target failed.
class CalibrationError : public Error {
public:
    using Error::Error;
};

/// A requested evaluation falls inside (or beyond) a singular region.
/// The bracket delimits where the singularity was located.
class SingularityError : public Error {
public:
    SingularityError(const std::string& what, double lo, double hi)
        : Error(what), bracket_lo(lo), bracket_hi(hi) {}

    double bracket_lo;
    double bracket_hi;
};

/// Sample grids passed to spectral operations must be dense and uniform.
class UnsupportedGridError : public Error {
public:
    using Error::Error;
};

} // namespace gup
