#include "doctest.h"

#include <cmath>
#include <complex>

#include "ptwalk/momentum_space.hpp"
#include "support/test_support.hpp"

using namespace ptwalk;

TEST_CASE("u_of_k at alpha = beta = 0 is the pure double shift") {
  const WalkParams p(0.0, 0.0, 1.0, 1.0, 1);
  for (double k : {0.3, -1.2, 2.9}) {
    const Eigen::Matrix2cd u = u_of_k(p, k);
    CHECK(std::abs(u(0, 0) - std::polar(1.0, 2 * k)) < 1e-14);
    CHECK(std::abs(u(1, 1) - std::polar(1.0, -2 * k)) < 1e-14);
    CHECK(std::abs(u(0, 1)) < 1e-15);
    CHECK(std::abs(u(1, 0)) < 1e-15);
  }
}

TEST_CASE("u_of_k determinant modulus is (l1 l2)^2") {
  auto& gen = testing::rng();
  for (int trial = 0; trial < 20; ++trial) {
    const double l1 = testing::random_loss(gen), l2 = testing::random_loss(gen);
    const WalkParams p(testing::random_angle(gen), testing::random_angle(gen),
                       l1, l2, 1);
    const double k = testing::random_angle(gen);
    const Eigen::Matrix2cd u = u_of_k(p, k);
    const Complex det = u(0, 0) * u(1, 1) - u(0, 1) * u(1, 0);
    CHECK(std::abs(det) == doctest::Approx(l1 * l1 * l2 * l2).epsilon(1e-12));
  }
}

TEST_CASE("u_of_k is unitary in the lossless case") {
  auto& gen = testing::rng();
  for (int trial = 0; trial < 10; ++trial) {
    const WalkParams p(testing::random_angle(gen), testing::random_angle(gen),
                       1.0, 1.0, 1);
    const Eigen::Matrix2cd u = u_of_k(p, testing::random_angle(gen));
    CHECK((u.adjoint() * u - Eigen::Matrix2cd::Identity()).norm() < 1e-12);
  }
}

TEST_CASE("u_of_k matches the dense operator on a translation-invariant ring") {
  // Dense step on a periodic ring block-diagonalizes into the u(k) with
  // k on the ring's reciprocal grid; compare multisets of eigenvalues.
  auto& gen = testing::rng();
  const int sites = 16;
  for (int trial = 0; trial < 3; ++trial) {
    const double l1 = testing::random_loss(gen), l2 = testing::random_loss(gen);
    const WalkParams p(testing::random_angle(gen), testing::random_angle(gen),
                       l1, l2, 1);

    Eigen::MatrixXcd ring(2 * sites, 2 * sites);
    ring.setZero();
    const Eigen::Matrix2d ca = coin_matrix(p.alpha), cb = coin_matrix(p.beta);
    for (int x = 0; x < sites; ++x) {
      for (int c0 = 0; c0 < 2; ++c0) {
        Eigen::VectorXcd v = Eigen::VectorXcd::Zero(2 * sites);
        v[2 * x + c0] = 1.0;
        const auto coin_step = [&](const Eigen::Matrix2d& cm) {
          for (int y = 0; y < sites; ++y) {
            const Complex up = v[2 * y], dn = v[2 * y + 1];
            v[2 * y] = cm(0, 0) * up + cm(0, 1) * dn;
            v[2 * y + 1] = cm(1, 0) * up + cm(1, 1) * dn;
          }
        };
        const auto shift_step = [&] {
          Eigen::VectorXcd w = Eigen::VectorXcd::Zero(2 * sites);
          for (int y = 0; y < sites; ++y) {
            w[2 * ((y + 1) % sites)] = v[2 * y];
            w[2 * ((y + sites - 1) % sites) + 1] = v[2 * y + 1];
          }
          v = w;
        };
        coin_step(ca);
        shift_step();
        for (int y = 0; y < sites; ++y) {
          v[2 * y] *= l2;
          v[2 * y + 1] *= l1;
        }
        coin_step(cb);
        shift_step();
        for (int y = 0; y < sites; ++y) {
          v[2 * y] *= l1;
          v[2 * y + 1] *= l2;
        }
        ring.col(2 * x + c0) = v;
      }
    }

    std::vector<Complex> from_ring;
    const Eigen::VectorXcd ring_eigs = ring.eigenvalues();
    for (int i = 0; i < ring_eigs.size(); ++i) from_ring.push_back(ring_eigs[i]);

    std::vector<Complex> from_momentum;
    for (int j = 0; j < sites; ++j) {
      const double k = 2.0 * kPi * j / sites;
      for (const Complex& lambda : eigenvalues_2x2(u_of_k(p, k))) {
        from_momentum.push_back(lambda);
      }
    }

    // greedy nearest matching
    std::vector<bool> used(from_momentum.size(), false);
    double worst = 0.0;
    for (const Complex& e : from_ring) {
      double best = 1e9;
      std::size_t best_i = 0;
      for (std::size_t i = 0; i < from_momentum.size(); ++i) {
        if (used[i]) continue;
        const double d = std::abs(from_momentum[i] - e);
        if (d < best) {
          best = d;
          best_i = i;
        }
      }
      used[best_i] = true;
      worst = std::max(worst, best);
    }
    CHECK(worst < 1e-10);
  }
}

TEST_CASE("quasienergy_hermitian closed-form values") {
  CHECK(quasienergy_hermitian(0.0, 0.0, 0.7) == doctest::Approx(0.7));
  CHECK(quasienergy_hermitian(kPi / 2, kPi / 2, 1.3) == doctest::Approx(kPi));
  CHECK(quasienergy_hermitian(kPi / 4, kPi / 4, kPi / 2) ==
        doctest::Approx(2.0 * kPi / 3));
}

TEST_CASE("bloch_vector values and unit norm") {
  SUBCASE("alpha = beta = pi/4, k = pi/2") {
    const Eigen::Vector3d n = bloch_vector(kPi / 4, kPi / 4, kPi / 2);
    const double r = 1.0 / std::sqrt(3.0);
    CHECK(n.x() == doctest::Approx(r).epsilon(1e-12));
    CHECK(n.y() == doctest::Approx(r).epsilon(1e-12));
    CHECK(n.z() == doctest::Approx(-r).epsilon(1e-12));
  }
  SUBCASE("alpha = 0, beta = pi/4, k = 0 points along y") {
    const Eigen::Vector3d n = bloch_vector(0.0, kPi / 4, 0.0);
    CHECK(n.x() == doctest::Approx(0.0).scale(1));
    CHECK(n.y() == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(n.z() == doctest::Approx(0.0).scale(1));
  }
  SUBCASE("unit norm wherever the gap is open") {
    auto& gen = testing::rng();
    for (int trial = 0; trial < 50; ++trial) {
      const double a = testing::random_angle(gen);
      const double b = testing::random_angle(gen);
      const double k = testing::random_angle(gen);
      if (std::sin(quasienergy_hermitian(a, b, k)) <= 1e-3) continue;
      CHECK(bloch_vector(a, b, k).norm() == doctest::Approx(1.0).epsilon(1e-10));
    }
  }
  SUBCASE("closed gap raises") {
    CHECK_THROWS_AS(bloch_vector(kPi / 4, -kPi / 4, 0.0), GapClosed);
  }
}

TEST_CASE("quasienergy_spectrum invariants") {
  SUBCASE("unitary walk has unimodular eigenvalues") {
    const WalkParams p(0.9, -1.7, 1.0, 1.0, 1);
    for (const MomentumSample& s : quasienergy_spectrum(p, 128)) {
      CHECK(std::abs(s.eigenvalues[0]) == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(std::abs(s.eigenvalues[1]) == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
  SUBCASE("modulus product equals (l1 l2)^2 at every k") {
    auto& gen = testing::rng();
    const WalkParams p(testing::random_angle(gen), testing::random_angle(gen),
                       1.0, 0.8, 1);
    for (const MomentumSample& s : quasienergy_spectrum(p, 256)) {
      CHECK(std::abs(s.eigenvalues[0]) * std::abs(s.eigenvalues[1]) ==
            doctest::Approx(0.64 * 0.64).epsilon(1e-10));
    }
  }
  SUBCASE("samples are ordered by k and quasi-energies are real when unbroken") {
    const WalkParams p(-2.0, 0.6, 1.0, 1.0, 1);
    const auto samples = quasienergy_spectrum(p, 64);
    for (std::size_t i = 1; i < samples.size(); ++i) {
      CHECK(samples[i].k > samples[i - 1].k);
    }
    for (const MomentumSample& s : samples) {
      CHECK(std::abs(s.quasi_energies[0].imag()) < 1e-12);
      CHECK(std::abs(s.quasi_energies[1].imag()) < 1e-12);
    }
  }
}

TEST_CASE("arg-derived quasi-energy matches the closed-form dispersion") {
  // The closed form uses the split-step (half-shift) convention; the
  // two-shift bands map onto it exactly via k -> 2k + pi, eps -> pi - eps.
  auto& gen = testing::rng();
  for (int trial = 0; trial < 5; ++trial) {
    const double a = trial == 0 ? kPi / 4 : testing::random_angle(gen);
    const double b = trial == 0 ? kPi / 4 : testing::random_angle(gen);
    const WalkParams p(a, b, 1.0, 1.0, 1);
    for (const MomentumSample& s : quasienergy_spectrum(p, 1024)) {
      const double eps_u = std::abs(s.quasi_energies[0].real());
      const double eps_closed =
          quasienergy_hermitian(a, b, wrap_radians(2.0 * s.k + kPi));
      CHECK(std::abs(eps_u - (kPi - eps_closed)) < 1e-10);
    }
  }
}

TEST_CASE("pt_phase_classify") {
  SUBCASE("lossless walks are always unbroken") {
    auto& gen = testing::rng();
    for (int trial = 0; trial < 10; ++trial) {
      const WalkParams p(testing::random_angle(gen), testing::random_angle(gen),
                         1.0, 1.0, 1);
      const PTPhase phase = pt_phase_classify(p, 512);
      CHECK(phase.tag == PTTag::Unbroken);
      CHECK(phase.max_modulus_split < 1e-12);
    }
  }
  SUBCASE("broken-pi region near alpha = -3pi/4 at beta = pi/4") {
    const WalkParams p(-3.0 * kPi / 4, kPi / 4, 1.0, 0.8, 1);
    CHECK(pt_phase_classify(p).tag == PTTag::BrokenPi);
  }
  SUBCASE("unbroken at alpha = -pi/2") {
    const WalkParams p(-kPi / 2, kPi / 4, 1.0, 0.8, 1);
    CHECK(pt_phase_classify(p).tag == PTTag::Unbroken);
  }
  SUBCASE("broken-zero region near alpha = +3pi/4") {
    const WalkParams p(3.0 * kPi / 4, kPi / 4, 1.0, 0.8, 1);
    CHECK(pt_phase_classify(p).tag == PTTag::BrokenZero);
  }
  SUBCASE("classification is stable under grid doubling away from boundaries") {
    // Exceptional points at beta = pi/4, (l1,l2) = (1,0.8) sit at
    // |alpha| in {0.64102, 0.95431, 2.18728, 2.50057}; stay 0.05 away.
    const double edges[] = {0.64102, 0.95431, 2.18728, 2.50057};
    for (double alpha = -3.1; alpha < 3.1; alpha += 0.17) {
      bool near_edge = false;
      for (double e : edges) {
        if (std::abs(std::abs(alpha) - e) < 0.05) near_edge = true;
      }
      if (near_edge) continue;
      const WalkParams p(alpha, kPi / 4, 1.0, 0.8, 1);
      CHECK(pt_phase_classify(p, 1024).tag == pt_phase_classify(p, 2048).tag);
    }
  }
}
