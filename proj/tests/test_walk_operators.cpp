#include "doctest.h"

#include <cmath>

#include "ptwalk/walk_operators.hpp"
#include "support/test_support.hpp"

using namespace ptwalk;

namespace {

double max_amp_dev(const WalkerState& a, const WalkerState& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.amplitudes().size(); ++i) {
    worst = std::max(worst, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
  }
  return worst;
}

}  // namespace

TEST_CASE("coin_matrix values") {
  const Eigen::Matrix2d c0 = coin_matrix(0.0);
  CHECK(c0(0, 0) == doctest::Approx(1.0));
  CHECK(c0(0, 1) == doctest::Approx(0.0));
  CHECK(c0(1, 1) == doctest::Approx(-1.0));

  const Eigen::Matrix2d c90 = coin_matrix(kPi / 2);
  CHECK(c90(0, 0) == doctest::Approx(0.0).epsilon(0).scale(1));
  CHECK(c90(0, 1) == doctest::Approx(1.0));
  CHECK(c90(1, 0) == doctest::Approx(1.0));

  const double r = std::sqrt(2.0) / 2.0;
  const Eigen::Matrix2d c45 = coin_matrix(kPi / 4);
  CHECK(c45(0, 0) == doctest::Approx(r));
  CHECK(c45(0, 1) == doctest::Approx(r));
  CHECK(c45(1, 0) == doctest::Approx(r));
  CHECK(c45(1, 1) == doctest::Approx(-r));

  // symmetric orthogonal for any angle
  auto& gen = testing::rng();
  for (int i = 0; i < 5; ++i) {
    const Eigen::Matrix2d c = coin_matrix(testing::random_angle(gen));
    CHECK((c * c - Eigen::Matrix2d::Identity()).norm() < 1e-15);
    CHECK((c - c.transpose()).norm() == 0.0);
  }
}

TEST_CASE("apply_coin acts per site") {
  SUBCASE("theta = 0 flips the sign of down") {
    const WalkerState s = apply_coin(new_state(3, 0, Coin::down), 0.0);
    CHECK(s.amp(0, Coin::down) == Complex(-1.0, 0.0));
  }
  SUBCASE("theta = pi/2 swaps the coin") {
    const WalkerState s = apply_coin(new_state(3, 0, Coin::up), kPi / 2);
    CHECK(std::abs(s.amp(0, Coin::down) - Complex(1.0, 0.0)) < 1e-15);
  }
  SUBCASE("involution: applying twice restores any state") {
    auto& gen = testing::rng();
    for (int trial = 0; trial < 10; ++trial) {
      const WalkerState s = testing::random_state(gen, 6, 6);
      const double theta = testing::random_angle(gen);
      const WalkerState twice = apply_coin(apply_coin(s, theta), theta);
      CHECK(max_amp_dev(s, twice) < 1e-15);
    }
  }
}

TEST_CASE("apply_shift moves up right and down left") {
  const WalkerState up = apply_shift(new_state(3, 0, Coin::up));
  CHECK(up.amp(1, Coin::up) == Complex(1.0, 0.0));
  const WalkerState dn = apply_shift(new_state(3, 0, Coin::down));
  CHECK(dn.amp(-1, Coin::down) == Complex(1.0, 0.0));

  WalkerState both(3);
  const double r = 1.0 / std::sqrt(2.0);
  both.amp(0, Coin::up) = r;
  both.amp(0, Coin::down) = r;
  const WalkerState shifted = apply_shift(both);
  CHECK(std::abs(shifted.amp(1, Coin::up) - Complex(r, 0.0)) < 1e-15);
  CHECK(std::abs(shifted.amp(-1, Coin::down) - Complex(r, 0.0)) < 1e-15);
  CHECK(norm_sq(shifted) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("apply_shift refuses to push amplitude off the lattice") {
  CHECK_THROWS_AS(apply_shift(new_state(3, 3, Coin::up)), LatticeOverflow);
  CHECK_THROWS_AS(apply_shift(new_state(3, -3, Coin::down)), LatticeOverflow);
}

TEST_CASE("apply_loss selects coin components") {
  SUBCASE("l1 = l2 = 1 leaves any state unchanged") {
    auto& gen = testing::rng();
    const WalkerState s = testing::random_state(gen, 5, 5);
    CHECK(max_amp_dev(s, apply_loss(s, 1.0, 1.0, false)) == 0.0);
    CHECK(max_amp_dev(s, apply_loss(s, 1.0, 1.0, true)) == 0.0);
  }
  SUBCASE("plain form scales down by l2") {
    const WalkerState s = apply_loss(new_state(2, 0, Coin::down), 1.0, 0.8, false);
    CHECK(s.amp(0, Coin::down) == Complex(0.8, 0.0));
  }
  SUBCASE("swapped form gives down the l1 factor") {
    const WalkerState s = apply_loss(new_state(2, 0, Coin::down), 1.0, 0.8, true);
    CHECK(s.amp(0, Coin::down) == Complex(1.0, 0.0));
    const WalkerState u = apply_loss(new_state(2, 0, Coin::up), 1.0, 0.8, true);
    CHECK(u.amp(0, Coin::up) == Complex(0.8, 0.0));
  }
}

TEST_CASE("step: hand-composed cases") {
  SUBCASE("alpha = beta = 0 transports |0,up> to |2,up>") {
    const WalkParams p(0.0, 0.0, 1.0, 1.0, 1);
    const WalkerState s = step(new_state(4, 0, Coin::up), p);
    CHECK(std::abs(s.amp(2, Coin::up) - Complex(1.0, 0.0)) < 1e-15);
    CHECK(norm_sq(s) == doctest::Approx(1.0).epsilon(1e-15));
  }
  SUBCASE("alpha = beta = pi/2 returns |0,up> to itself") {
    const WalkParams p(kPi / 2, kPi / 2, 1.0, 1.0, 1);
    const WalkerState s = step(new_state(4, 0, Coin::up), p);
    CHECK(std::abs(s.amp(0, Coin::up) - Complex(1.0, 0.0)) < 1e-15);
  }
  SUBCASE("swapped loss hits the up component once") {
    const WalkParams p(0.0, 0.0, 1.0, 0.8, 1);
    const WalkerState s = step(new_state(4, 0, Coin::up), p);
    CHECK(std::abs(s.amp(2, Coin::up) - Complex(0.8, 0.0)) < 1e-15);
  }
}

TEST_CASE("step conserves the norm exactly enough in the unitary case") {
  auto& gen = testing::rng();
  for (int trial = 0; trial < 5; ++trial) {
    const WalkParams p(testing::random_angle(gen), testing::random_angle(gen),
                       1.0, 1.0, 50);
    WalkerState s = new_state(100, 0, Coin::up);
    double prev = norm_sq(s);
    for (int i = 0; i < 50; ++i) {
      s = step(s, p);
      const double now = norm_sq(s);
      CHECK(std::abs(now - prev) < 1e-14);  // per-step drift
      prev = now;
    }
    CHECK(std::abs(prev - 1.0) < 1e-12);
  }
}

TEST_CASE("lossy steps contract the norm") {
  auto& gen = testing::rng();
  for (int trial = 0; trial < 5; ++trial) {
    const WalkParams p(testing::random_angle(gen), testing::random_angle(gen),
                       testing::random_loss(gen), testing::random_loss(gen), 10);
    WalkerState s = testing::random_state(gen, 40, 10);
    double prev = norm_sq(s);
    for (int i = 0; i < 10; ++i) {
      s = step(s, p);
      const double now = norm_sq(s);
      CHECK(now <= prev + 1e-15);
      prev = now;
    }
  }
}

TEST_CASE("evolve records the trajectory") {
  SUBCASE("t = 0 returns only the initial state") {
    const WalkParams p(0.3, -0.2, 1.0, 1.0, 0);
    const auto traj = evolve(new_state(1, 0, Coin::up), p);
    CHECK(traj.size() == 1);
  }
  SUBCASE("t = 3 straight-line walk lands on |6,up>") {
    const WalkParams p(0.0, 0.0, 1.0, 1.0, 3);
    const auto traj = evolve(new_state(6, 0, Coin::up), p);
    CHECK(traj.size() == 4);
    CHECK(std::abs(traj.back().amp(6, Coin::up) - Complex(1.0, 0.0)) < 1e-15);
  }
  SUBCASE("unitary norm after 15 steps") {
    const WalkParams p(1.1, -0.7, 1.0, 1.0, 15);
    const auto traj = evolve(new_state(30, 0, Coin::up), p);
    CHECK(std::abs(norm_sq(traj.back()) - 1.0) < 1e-12);
  }
  SUBCASE("insufficient lattice is rejected up front") {
    const WalkParams p(0.1, 0.1, 1.0, 1.0, 4);
    CHECK_THROWS_AS(evolve(new_state(7, 0, Coin::up), p), OutOfLattice);
  }
}

TEST_CASE("dense_operator is a faithful oracle for step") {
  auto& gen = testing::rng();

  SUBCASE("unitary columns away from the edges") {
    const WalkParams p(0.4, 1.2, 1.0, 1.0, 1);
    const Eigen::MatrixXcd U = dense_operator(p, 6);
    for (int x = -4; x <= 4; ++x) {
      for (int c = 0; c < 2; ++c) {
        const int col = 2 * (x + 6) + c;
        CHECK(U.col(col).norm() == doctest::Approx(1.0).epsilon(1e-12));
      }
    }
  }

  SUBCASE("straight-line column structure at alpha = beta = 0") {
    const WalkParams p(0.0, 0.0, 1.0, 1.0, 1);
    const Eigen::MatrixXcd U = dense_operator(p, 4);
    const int col = 2 * (0 + 4) + 0;  // (x=0, up)
    const int row = 2 * (2 + 4) + 0;  // (x=2, up)
    for (int r = 0; r < U.rows(); ++r) {
      CHECK(std::abs(U(r, col) - (r == row ? 1.0 : 0.0)) < 1e-15);
    }
  }

  SUBCASE("matrix product equals step on interior-supported states") {
    for (int trial = 0; trial < 100; ++trial) {
      const WalkParams p(testing::random_angle(gen), testing::random_angle(gen),
                         testing::random_loss(gen), testing::random_loss(gen), 1);
      const Eigen::MatrixXcd U = dense_operator(p, 10);
      const WalkerState s = testing::random_state(gen, 10, 6);
      const Eigen::VectorXcd via_matrix = U * testing::flatten(s);
      const Eigen::VectorXcd via_step = testing::flatten(step(s, p));
      CHECK((via_matrix - via_step).cwiseAbs().maxCoeff() < 1e-12);
    }
  }
}

TEST_CASE("parameters are canonicalized and validated") {
  const WalkParams p(3.5 * kPi, -2.5 * kPi, 1.0, 1.0, 1);
  CHECK(p.alpha == doctest::Approx(-0.5 * kPi));
  CHECK(p.beta == doctest::Approx(-0.5 * kPi));
  CHECK_THROWS_AS(WalkParams(0, 0, 1.2, 1.0, 1), InvalidArgument);
  CHECK_THROWS_AS(WalkParams(0, 0, 1.0, -0.1, 1), InvalidArgument);
  CHECK_THROWS_AS(WalkParams(0, 0, 1.0, 1.0, -2), InvalidArgument);
}
