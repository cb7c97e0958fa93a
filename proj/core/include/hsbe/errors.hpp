#pragma once

#include <stdexcept>
#include <string>

namespace hsbe {

/// Base class for every failure condition the solvers can signal.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A principal square root came out with nonpositive real part where the
/// sector theory guarantees positivity; (lambda, xi') is outside the
/// admissible region or a branch fault occurred.
struct BranchViolation : SolverError {
  using SolverError::SolverError;
};

/// beta = 0: the degeneracy point eta does not exist and the coupled
/// formulas are invalid; callers must take the decoupled Stokes/heat path.
struct BetaZero : SolverError {
  using SolverError::SolverError;
};

/// lambda is within the degeneracy threshold of eta; the regular-branch
/// divided differences are unreliable and the tilde branch must be used.
struct DegenerateLambda : SolverError {
  using SolverError::SolverError;
};

/// The per-mode amplitude system was numerically singular (calC*calA ~ 0);
/// on the sector this indicates a verification failure, not expected input.
struct SingularSystem : SolverError {
  using SolverError::SolverError;
};

/// A non-vanishing scan found a grid point below the configured floor.
struct FloorViolated : SolverError {
  using SolverError::SolverError;
};

/// A multiplier constant grew more than 2x under grid refinement.
struct UnstableConstant : SolverError {
  using SolverError::SolverError;
};

/// The whole-space elimination symbol vanished at a grid frequency.
struct SymbolVanished : SolverError {
  using SolverError::SolverError;
};

/// Picard iteration did not contract.
struct NoContraction : SolverError {
  using SolverError::SolverError;
};

/// The Laplace contour gamma + i tau left the admissible sector.
struct ContourTooLow : SolverError {
  using SolverError::SolverError;
};

/// The oracle two-point BVP matrix was singular (inadmissible lambda or a
/// truncation too short to carry the decay closure).
struct SingularDiscretization : SolverError {
  using SolverError::SolverError;
};

/// Malformed run configuration (CLI exit code 2).
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace hsbe
