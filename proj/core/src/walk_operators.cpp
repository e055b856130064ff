#include "ptwalk/walk_operators.hpp"

#include <cmath>
#include <string>
#include <utility>

namespace ptwalk {

namespace {

// Shift with configurable edge behavior. When truncate is true, amplitude
// that would leave the lattice is dropped (zero row); otherwise it throws.
void shift_impl(WalkerState& state, bool truncate) {
  const int X = state.halfwidth();
  if (!truncate && state.amp(X, Coin::up) != 0.0) {
    throw LatticeOverflow("up-amplitude at x=" + std::to_string(X) +
                          " would shift past the lattice edge");
  }
  if (!truncate && state.amp(-X, Coin::down) != 0.0) {
    throw LatticeOverflow("down-amplitude at x=" + std::to_string(-X) +
                          " would shift past the lattice edge");
  }
  for (int x = X; x > -X; --x) state.amp(x, Coin::up) = state.amp(x - 1, Coin::up);
  state.amp(-X, Coin::up) = 0.0;
  for (int x = -X; x < X; ++x) state.amp(x, Coin::down) = state.amp(x + 1, Coin::down);
  state.amp(X, Coin::down) = 0.0;
}

WalkerState step_impl(WalkerState state, const WalkParams& params, bool truncate) {
  state = apply_coin(std::move(state), params.alpha);
  shift_impl(state, truncate);
  state = apply_loss(std::move(state), params.l1, params.l2, /*swapped=*/true);
  state = apply_coin(std::move(state), params.beta);
  shift_impl(state, truncate);
  state = apply_loss(std::move(state), params.l1, params.l2, /*swapped=*/false);
  return state;
}

}  // namespace

WalkParams::WalkParams(double alpha_rad, double beta_rad, double l1_in,
                       double l2_in, int steps_in)
    : alpha(wrap_radians(alpha_rad)),
      beta(wrap_radians(beta_rad)),
      l1(l1_in),
      l2(l2_in),
      steps(steps_in) {
  if (!(l1 >= 0.0 && l1 <= 1.0 && l2 >= 0.0 && l2 <= 1.0)) {
    throw InvalidArgument("loss amplitudes must lie in [0, 1]");
  }
  if (steps < 0) throw InvalidArgument("step count must be >= 0");
}

Eigen::Matrix2d coin_matrix(double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  Eigen::Matrix2d m;
  m << c, s, s, -c;
  return m;
}

WalkerState apply_coin(WalkerState state, double theta) {
  const double c = std::cos(theta), s = std::sin(theta);
  const int X = state.halfwidth();
  for (int x = -X; x <= X; ++x) {
    const Complex up = state.amp(x, Coin::up);
    const Complex dn = state.amp(x, Coin::down);
    state.amp(x, Coin::up) = up * c + dn * s;
    state.amp(x, Coin::down) = up * s - dn * c;
  }
  return state;
}

WalkerState apply_shift(WalkerState state) {
  shift_impl(state, /*truncate=*/false);
  return state;
}

WalkerState apply_loss(WalkerState state, double l1, double l2, bool swapped) {
  if (!(l1 >= 0.0 && l1 <= 1.0 && l2 >= 0.0 && l2 <= 1.0)) {
    throw InvalidArgument("loss amplitudes must lie in [0, 1]");
  }
  const double up_factor = swapped ? l2 : l1;
  const double down_factor = swapped ? l1 : l2;
  const int X = state.halfwidth();
  for (int x = -X; x <= X; ++x) {
    state.amp(x, Coin::up) *= up_factor;
    state.amp(x, Coin::down) *= down_factor;
  }
  return state;
}

WalkerState step(WalkerState state, const WalkParams& params) {
  return step_impl(std::move(state), params, /*truncate=*/false);
}

std::vector<WalkerState> evolve(const WalkerState& initial,
                                const WalkParams& params) {
  if (initial.halfwidth() < 2 * params.steps) {
    throw OutOfLattice("lattice halfwidth " +
                       std::to_string(initial.halfwidth()) +
                       " too small for " + std::to_string(params.steps) +
                       " steps (need >= 2t)");
  }
  std::vector<WalkerState> trajectory;
  trajectory.reserve(static_cast<std::size_t>(params.steps) + 1);
  trajectory.push_back(initial);
  for (int i = 0; i < params.steps; ++i) {
    trajectory.push_back(step(trajectory.back(), params));
  }
  return trajectory;
}

Eigen::MatrixXcd dense_operator(const WalkParams& params, int halfwidth) {
  if (halfwidth < 2) throw InvalidArgument("dense_operator needs halfwidth >= 2");
  const int n = 2 * (2 * halfwidth + 1);
  Eigen::MatrixXcd U(n, n);
  for (int col = 0; col < n; ++col) {
    WalkerState basis(halfwidth);
    basis.amplitudes()[static_cast<std::size_t>(col)] = 1.0;
    WalkerState image = step_impl(std::move(basis), params, /*truncate=*/true);
    for (int row = 0; row < n; ++row) {
      U(row, col) = image.amplitudes()[static_cast<std::size_t>(row)];
    }
  }
  return U;
}

}  // namespace ptwalk
