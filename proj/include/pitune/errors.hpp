#pragma once

#include <stdexcept>
#include <string>

namespace pitune {

/// Base class for all library-specific failures.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// poly_roots only handles degrees 1 through 3.
struct DegreeUnsupported : Error {
    using Error::Error;
};

/// Transfer-function evaluation landed on (or numerically under) a pole.
struct EvalAtPole : Error {
    using Error::Error;
};

/// Damping diagnostics require the controller zero to sit on the slow plant pole.
struct CancellationRequired : Error {
    using Error::Error;
};

/// Step simulation requires numerator degree strictly below denominator degree.
struct NotStrictlyProper : Error {
    using Error::Error;
};

/// Step simulation refuses systems with a pole in the open right half plane.
struct UnstableSystem : Error {
    using Error::Error;
};

/// The response tail never entered the settling band.
struct NotSettled : Error {
    using Error::Error;
};

/// Gain-crossover search requires |L| > 1 at the low end and < 1 at the high end.
struct NotBracketed : Error {
    using Error::Error;
};

/// Frequency range must satisfy 0 < omega_lo < omega_hi.
struct InvalidRange : Error {
    using Error::Error;
};

}  // namespace pitune
