#pragma once

#include <stdexcept>
#include <string>

namespace zs {

// Base class for all precondition and numeric-domain failures raised by the
// library. CLI maps subclasses of Error to exit code 1 (numeric failure) and
// InvalidInput to exit code 2 (input error).
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// surface / spectrum
struct NonHyperbolicElement : Error { using Error::Error; };
struct InvalidLength : Error { using Error::Error; };
struct EmptySpectrum : Error { using Error::Error; };
struct CutoffExceeded : Error { using Error::Error; };

// special functions
struct PoleAtNonpositiveInteger : Error { using Error::Error; };
struct DomainError : Error { using Error::Error; };

// zeta / determinant / resonances
struct ConvergenceRegionError : Error { using Error::Error; };
struct IncompleteSpectrum : Error { using Error::Error; };
struct ZeroDivision : Error { using Error::Error; };
struct BoundaryZero : Error { using Error::Error; };
struct NonConvergence : Error { using Error::Error; };

// charts / heat / finite part
struct SupportTouchesBoundary : Error { using Error::Error; };
struct QuadratureFailure : Error { using Error::Error; };
struct ExpansionMismatch : Error { using Error::Error; };

// bounds
struct RangeExceeded : Error { using Error::Error; };
struct InvalidR : Error { using Error::Error; };

// CLI / file input problems (exit code 2)
struct InvalidInput : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace zs
