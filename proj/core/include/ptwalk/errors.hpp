#ifndef PTWALK_ERRORS_HPP
#define PTWALK_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ptwalk {

/// Base class for all ptwalk errors.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- lattice / state errors -------------------------------------------------

/// Requested position lies outside the lattice.
struct OutOfLattice : Error {
  using Error::Error;
};

/// A shift would move amplitude past the lattice edge.
struct LatticeOverflow : Error {
  using Error::Error;
};

/// Normalization requested on a numerically zero state.
struct ZeroNorm : Error {
  using Error::Error;
};

// --- observable errors ------------------------------------------------------

/// Operation requires a normalized probability distribution.
struct NotNormalized : Error {
  using Error::Error;
};

/// Diffusion coefficient requested at t = 0.
struct DivisionByZeroStep : Error {
  using Error::Error;
};

/// M2 - M1^2 came out more negative than rounding can explain.
struct MomentConsistencyError : Error {
  using Error::Error;
};

// --- spectral / topology errors ----------------------------------------------

/// Quasi-energy gap (numerically) closed where an open gap is required.
struct GapClosed : Error {
  using Error::Error;
};

/// Winding quadrature did not land on an integer within tolerance.
struct NonConvergent : Error {
  using Error::Error;
};

/// Broken-phase real part not near 0 or pi; snap heuristic refused to guess.
struct UnclassifiableBrokenPhase : Error {
  using Error::Error;
};

/// Argument outside the documented domain of an operation.
struct InvalidArgument : Error {
  using Error::Error;
};

// --- interface errors ---------------------------------------------------------

/// Config file or flag could not be parsed/validated.
struct ConfigError : Error {
  using Error::Error;
};

/// A plot was requested for a result that cannot be plotted.
struct NothingToPlot : Error {
  using Error::Error;
};

/// Filesystem failure, with path context in the message.
struct IoError : Error {
  using Error::Error;
};

}  // namespace ptwalk

#endif  // PTWALK_ERRORS_HPP
