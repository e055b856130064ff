#include "ptwalk/lattice_state.hpp"

#include <string>

namespace ptwalk {

WalkerState new_state(int halfwidth, int position, Coin coin) {
  if (halfwidth < 0) throw InvalidArgument("lattice halfwidth must be >= 0");
  WalkerState state(halfwidth);
  if (!state.contains(position)) {
    throw OutOfLattice("position " + std::to_string(position) +
                       " outside lattice [-" + std::to_string(halfwidth) +
                       ", " + std::to_string(halfwidth) + "]");
  }
  state.amp(position, coin) = 1.0;
  return state;
}

double norm_sq(const WalkerState& state) {
  double s = 0.0;
  for (const Complex& a : state.amplitudes()) s += std::norm(a);
  return s;
}

ProbDist probability_distribution(const WalkerState& state, bool normalize) {
  ProbDist dist;
  dist.entries.reserve(static_cast<std::size_t>(state.num_sites()));
  double total = 0.0;
  for (int x = -state.halfwidth(); x <= state.halfwidth(); ++x) {
    double p = std::norm(state.amp(x, Coin::up)) +
               std::norm(state.amp(x, Coin::down));
    dist.entries.emplace_back(x, p);
    total += p;
  }
  dist.total_norm = total;
  if (normalize) {
    if (total <= 1e-300) throw ZeroNorm("cannot normalize a zero state");
    for (auto& [x, p] : dist.entries) p /= total;
    dist.normalized = true;
  }
  return dist;
}

}  // namespace ptwalk
