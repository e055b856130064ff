#ifndef PTWALK_OBSERVABLES_HPP
#define PTWALK_OBSERVABLES_HPP

/// Position moments, diffusion coefficient D = (M2 - M1^2) / 2t, and base-2
/// Shannon entropy of a walker's position distribution.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ptwalk/lattice_state.hpp"

namespace ptwalk {

struct ObservableRecord {
  int t = 0;
  double m1 = 0.0;  // surviving-norm-weighted first moment
  double m2 = 0.0;  // surviving-norm-weighted second moment
  double variance = 0.0;
  std::optional<double> diffusion;  // unset at t = 0
  double entropy_bits = 0.0;
  double surviving_norm = 1.0;
};

/// First and second position moments of a normalized distribution.
std::pair<double, double> moments(const ProbDist& dist);

/// M2 - M1^2, clamped to 0 against rounding; a deficit beyond 1e-12 throws
/// MomentConsistencyError.
double variance_from_moments(double m1, double m2);

/// D = (M2 - M1^2) / (2t) for a normalized distribution; t = 0 throws.
double diffusion_coefficient(const ProbDist& dist, int t);

/// S = -sum p log2 p with 0 log 0 = 0, for a normalized distribution.
double shannon_entropy(const ProbDist& dist);

/// One record per trajectory element. Entropy is taken on the distribution
/// normalized by the surviving norm; the moments (and hence D) are weighted
/// by the surviving norm, so lossy evolution discounts spread by survival.
/// For unitary walks the two conventions coincide.
std::vector<ObservableRecord> observable_series(
    std::span<const WalkerState> trajectory);

}  // namespace ptwalk

#endif  // PTWALK_OBSERVABLES_HPP
