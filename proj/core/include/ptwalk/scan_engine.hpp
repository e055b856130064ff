#ifndef PTWALK_SCAN_ENGINE_HPP
#define PTWALK_SCAN_ENGINE_HPP

/// Parameter sweeps over (alpha, beta, t, l1, l2), binding evolution,
/// observables, and topology into flat tabular rows.
///
/// Angles cross this interface in units of pi (0.25 means pi/4); they are
/// converted to radians at the physics boundary. Grid cells are independent
/// and evaluated in parallel; rows are emitted sorted by (beta, alpha, t),
/// and per-cell failures become empty row fields instead of aborting a sweep.

#include <optional>
#include <vector>

#include "ptwalk/momentum_space.hpp"
#include "ptwalk/topology.hpp"

namespace ptwalk {

/// Half-open uniform grid in pi units: value(j) = start + (stop-start) * j / count.
struct GridSpec {
  double start_pi = -1.0;
  double stop_pi = 1.0;
  int count = 201;

  double value(int j) const {
    return start_pi + (stop_pi - start_pi) * j / count;
  }
  std::vector<double> values_pi() const;

  bool operator==(const GridSpec&) const = default;
};

struct SweepSpec {
  GridSpec alpha;
  std::vector<double> beta_values_pi{0.25};
  std::vector<int> t_values{15};
  double l1 = 1.0;
  double l2 = 1.0;
  int num_k = 1024;
  Coin initial_coin = Coin::up;
};

struct SweepRow {
  double alpha_pi = 0.0;
  double beta_pi = 0.0;
  std::optional<int> t;
  double l1 = 1.0;
  double l2 = 1.0;
  std::optional<double> diffusion;
  std::optional<double> entropy_bits;
  std::optional<double> surviving_norm;
  std::optional<int> winding;  // empty: gap closed, non-convergent, or non-Hermitian
  double gap_zero = 0.0;       // radians
  double gap_pi = 0.0;         // radians
  std::optional<PTTag> pt_phase;  // empty when classification failed
};

struct SweepResult {
  std::vector<SweepRow> rows;
};

/// Full sweep: evolves |0, coin> per (beta, alpha) cell, records D, S and the
/// surviving norm at each requested t, plus winding (Hermitian, gap
/// permitting) or PT phase per cell.
SweepResult run_sweep(const SweepSpec& spec);

/// PT-phase classification across the alpha grid; no evolution.
SweepResult run_pt_scan(const SweepSpec& spec);

/// Observable table for a single walk: one row per time index 0..t
/// (diffusion is empty on the t = 0 row).
SweepResult run_evolve(double alpha_pi, double beta_pi, double l1, double l2,
                       int t, Coin coin, int num_k);

/// One-row table for a single winding evaluation. Propagates GapClosed /
/// NonConvergent.
struct WindingRun {
  WindingResult result;
  SweepResult table;
};
WindingRun run_winding(double alpha_pi, double beta_pi, int num_k);

/// Hermitian winding phase diagram over an (alpha, beta) grid, flattened to
/// rows (boundary cells keep an empty winding field). Keeps the grid axes for
/// heatmap plotting.
struct PhaseDiagramResult {
  std::vector<double> alphas_pi;
  std::vector<double> betas_pi;
  SweepResult table;
};
PhaseDiagramResult run_phase_diagram(const GridSpec& alpha, const GridSpec& beta,
                                     int num_k);

}  // namespace ptwalk

#endif  // PTWALK_SCAN_ENGINE_HPP
