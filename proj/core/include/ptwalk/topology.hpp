#ifndef PTWALK_TOPOLOGY_HPP
#define PTWALK_TOPOLOGY_HPP

/// Winding number of the Hermitian walk by Brillouin-zone quadrature,
///
///   W = (1/2pi) \oint dk (n x dn/dk) . Gamma,   Gamma = (cos a, 0, sin a),
///
/// with dn/dk by central differences on the periodic k-grid and the midpoint
/// rule for the integral. Gap closures of the dispersion define the phase
/// boundaries: cos eps is extremal at k in {0, pi} with values cos(a+b) and
/// -cos(a-b), so both gaps follow in closed form.

#include <optional>
#include <vector>

#include "ptwalk/momentum_space.hpp"

namespace ptwalk {

struct WindingResult {
  int value = 0;
  double raw_integral = 0.0;
  double residual = 0.0;  // |raw_integral - value|
  int num_k_used = 0;
};

struct GapReport {
  double gap_zero = 0.0;  // min over k of |eps(k)|
  double gap_pi = 0.0;    // min over k of |pi - eps(k)|
};

/// Both band-edge gaps, exactly: eps(0) = |wrap(a+b)|, eps(pi) = pi - |wrap(a-b)|.
GapReport gap_at(double alpha, double beta);

/// Quadrature of the winding integral on num_k points. Throws GapClosed when
/// either gap is <= gap_tol, NonConvergent when the integral is farther than
/// 0.01 from the nearest integer.
WindingResult winding_number(double alpha, double beta, int num_k = 1024,
                             double gap_tol = 1e-6);

struct PhaseDiagramCell {
  GapReport gaps;
  std::optional<WindingResult> winding;  // nullopt marks a gap-closed boundary cell
};

struct PhaseDiagramGrid {
  std::vector<double> alphas;  // radians
  std::vector<double> betas;   // radians
  std::vector<PhaseDiagramCell> cells;  // cells[ib * alphas.size() + ia]

  const PhaseDiagramCell& at(std::size_t ia, std::size_t ib) const {
    return cells[ib * alphas.size() + ia];
  }
};

/// Winding number (or boundary marker) per (alpha, beta) grid cell. Cells are
/// independent and evaluated in parallel; output ordering is deterministic.
/// A NonConvergent cell aborts the diagram with its coordinates in the message.
PhaseDiagramGrid phase_diagram(const std::vector<double>& alpha_grid,
                               const std::vector<double>& beta_grid,
                               int num_k = 1024);

}  // namespace ptwalk

#endif  // PTWALK_TOPOLOGY_HPP
