#pragma once

#include <stdexcept>
#include <string>

namespace ecarith {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Mixing elements of distinct fields.
struct SpecMismatchError : Error { using Error::Error; };

/// Inversion of zero (or division by zero anywhere).
struct DivisionByZeroError : Error { using Error::Error; };

/// Operation not available for this field kind / characteristic.
struct UnsupportedError : Error { using Error::Error; };

/// Curve or family parameters with vanishing discriminant.
struct SingularCurveError : Error { using Error::Error; };

/// Caller broke a precondition (off-curve point, unregistered constant, ...).
struct ContractViolationError : Error { using Error::Error; };

/// Singular point of D1 fed to a map defined on the nonsingular locus.
struct SingularInputError : Error { using Error::Error; };

/// Twist-mode operation without a twist parameter s.
struct MissingTwistError : Error { using Error::Error; };

/// Map evaluated at a point where it is not defined.
struct UndefinedPointError : Error { using Error::Error; };

/// "Cannot happen" conditions (complete systems vanishing, smooth-model holes).
struct InternalInvariantError : Error { using Error::Error; };

/// Request too large for the brute-force path.
struct RefusalError : Error { using Error::Error; };

} // namespace ecarith
