#ifndef PTWALK_LATTICE_STATE_HPP
#define PTWALK_LATTICE_STATE_HPP

/// Walker state on a finite 1D lattice with a two-level coin, and the
/// position probability distribution derived from it.
///
/// Amplitudes are stored densely, interleaved by coin:
///   index(x, c) = 2 * (x + halfwidth) + c,  x in [-halfwidth, halfwidth].

#include <complex>
#include <utility>
#include <vector>

#include "ptwalk/errors.hpp"

namespace ptwalk {

using Complex = std::complex<double>;

enum class Coin { up = 0, down = 1 };

class WalkerState {
 public:
  /// Zero state on 2*halfwidth+1 sites.
  explicit WalkerState(int halfwidth)
      : halfwidth_(halfwidth),
        amps_(2 * (2 * static_cast<std::size_t>(halfwidth) + 1)) {
    if (halfwidth < 0) throw InvalidArgument("lattice halfwidth must be >= 0");
  }

  int halfwidth() const { return halfwidth_; }
  int num_sites() const { return 2 * halfwidth_ + 1; }
  std::size_t dim() const { return amps_.size(); }

  Complex& amp(int x, Coin c) { return amps_[index(x, c)]; }
  const Complex& amp(int x, Coin c) const { return amps_[index(x, c)]; }

  std::vector<Complex>& amplitudes() { return amps_; }
  const std::vector<Complex>& amplitudes() const { return amps_; }

  bool contains(int x) const { return x >= -halfwidth_ && x <= halfwidth_; }

 private:
  std::size_t index(int x, Coin c) const {
    return 2 * static_cast<std::size_t>(x + halfwidth_) +
           static_cast<std::size_t>(c);
  }

  int halfwidth_;
  std::vector<Complex> amps_;
};

/// Position probability distribution, one entry per lattice site.
struct ProbDist {
  std::vector<std::pair<int, double>> entries;  // (position, probability), positions increasing
  double total_norm = 0.0;                      // squared norm before normalization
  bool normalized = false;

  double sum() const {
    double s = 0.0;
    for (const auto& [x, p] : entries) s += p;
    return s;
  }
};

/// Delta state |position, coin>. Throws OutOfLattice if |position| > halfwidth.
WalkerState new_state(int halfwidth, int position, Coin coin);

/// Sum of |amplitude|^2 over all sites and coins.
double norm_sq(const WalkerState& state);

/// Per-site probabilities |amp(x,up)|^2 + |amp(x,down)|^2. With normalize=true
/// the entries are divided by the total squared norm (throws ZeroNorm when the
/// state is numerically dead); the raw norm is recorded either way.
ProbDist probability_distribution(const WalkerState& state, bool normalize);

}  // namespace ptwalk

#endif  // PTWALK_LATTICE_STATE_HPP
