#ifndef PTWALK_WALK_OPERATORS_HPP
#define PTWALK_WALK_OPERATORS_HPP

/// The four operator factors of one split-step walk step,
///
///   U = L T C(beta) L' T C(alpha),
///
/// applied in place on a WalkerState (rightmost factor first), plus a dense
/// matrix builder used as a brute-force oracle in tests.
///
/// C(theta) rotates the coin, T shifts up-amplitudes by +1 and down-amplitudes
/// by -1, and L = diag(l1, l2) / L' = diag(l2, l1) act coin-wise as losses.
/// l1 = l2 = 1 makes every factor unitary.

#include <Eigen/Core>
#include <vector>

#include "ptwalk/angles.hpp"
#include "ptwalk/lattice_state.hpp"

namespace ptwalk {

struct WalkParams {
  double alpha = 0.0;  // radians, canonicalized to [-pi, pi)
  double beta = 0.0;   // radians, canonicalized to [-pi, pi)
  double l1 = 1.0;
  double l2 = 1.0;
  int steps = 0;

  WalkParams() = default;
  WalkParams(double alpha_rad, double beta_rad, double l1_in, double l2_in,
             int steps_in);

  bool hermitian() const { return l1 == 1.0 && l2 == 1.0; }
};

/// [[cos t, sin t], [sin t, -cos t]] -- symmetric, orthogonal, det -1.
Eigen::Matrix2d coin_matrix(double theta);

/// Coin rotation at every site; positions untouched.
WalkerState apply_coin(WalkerState state, double theta);

/// amp(x+1, up) <- amp(x, up);  amp(x-1, down) <- amp(x, down).
/// Throws LatticeOverflow if nonzero amplitude would leave the lattice.
WalkerState apply_shift(WalkerState state);

/// swapped=false: up *= l1, down *= l2 (the L factor).
/// swapped=true:  up *= l2, down *= l1 (the L' factor).
WalkerState apply_loss(WalkerState state, double l1, double l2, bool swapped);

/// One full step: C(alpha), T, L', C(beta), T, L in that order.
WalkerState step(WalkerState state, const WalkParams& params);

/// Trajectory [initial, U initial, ..., U^t initial]. Requires
/// halfwidth >= 2 * steps so no shift can reach the edge.
std::vector<WalkerState> evolve(const WalkerState& initial,
                                const WalkParams& params);

/// Dense matrix of one step on a (2*halfwidth+1)-site lattice, with rows that
/// would shift off the lattice truncated to zero. Index layout matches
/// WalkerState: row/col = 2*(x+halfwidth) + coin.
Eigen::MatrixXcd dense_operator(const WalkParams& params, int halfwidth);

}  // namespace ptwalk

#endif  // PTWALK_WALK_OPERATORS_HPP
