#pragma once

#include <stdexcept>
#include <string>

namespace dtsp {

struct SolverError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Two points closer than four turning radii: outside the long-path regime.
struct SeparationTooSmall : SolverError {
    using SolverError::SolverError;
};

/// Tangent construction lost precision (unreachable under valid preconditions).
struct NumericalDegeneracy : SolverError {
    using SolverError::SolverError;
};

/// A constraint direction that should be unit length is not.
struct NotUnit : SolverError {
    using SolverError::SolverError;
};

/// Point count exceeds the exact-solver limit.
struct TooLarge : SolverError {
    using SolverError::SolverError;
};

/// More sharp turns than the flip enumeration cap allows.
struct TooManyFlips : SolverError {
    using SolverError::SolverError;
};

/// Generator spec cannot pack the requested points at the requested separation.
struct Infeasible : SolverError {
    using SolverError::SolverError;
};

/// No valid initial point configuration found within the attempt budget.
struct MixingFailure : SolverError {
    using SolverError::SolverError;
};

}  // namespace dtsp
