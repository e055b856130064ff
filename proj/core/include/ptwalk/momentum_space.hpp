#ifndef PTWALK_MOMENTUM_SPACE_HPP
#define PTWALK_MOMENTUM_SPACE_HPP

/// Momentum-space (Bloch) form of the one-step operator.
///
/// Translation invariance turns the two shifts into T(k) = diag(e^{ik}, e^{-ik}),
/// so the walk reduces per momentum to the 2x2 matrix
///
///   u(k) = L T(k) C(beta) L' T(k) C(alpha),     det u(k) = (l1 l2)^2.
///
/// Eigenvalues lambda relate to quasi-energies via lambda = e^{-i eps + eps0}
/// with e^{-eps0} = 1/(l1 l2): unbroken PT symmetry means both moduli equal
/// l1 l2 and eps is real; a broken phase has a modulus split and the dominant
/// eigenvalue is real, so Re(eps) snaps to 0 or pi.
///
/// The closed-form Hermitian dispersion used for topology is
///
///   cos eps(k) = -sin a sin b + cos k cos a cos b,
///
/// the split-step (half-shift) convention. The two-shift operator's bands map
/// onto it exactly via k -> 2k + pi, eps -> pi - eps; both conventions share
/// gap closures and the walk's real-space physics.

#include <Eigen/Core>
#include <array>
#include <complex>
#include <optional>
#include <vector>

#include "ptwalk/walk_operators.hpp"

namespace ptwalk {

/// Eigenvalues of a 2x2 complex matrix from the trace/determinant quadratic.
std::array<Complex, 2> eigenvalues_2x2(const Eigen::Matrix2cd& m);

/// Bloch matrix u(k) = L T(k) C(beta) L' T(k) C(alpha).
Eigen::Matrix2cd u_of_k(const WalkParams& params, double k);

/// Closed-form Hermitian quasi-energy, principal branch in [0, pi].
double quasienergy_hermitian(double alpha, double beta, double k);

/// Unit Bloch vector n(k) of the Hermitian effective Hamiltonian:
///   n_x =  sin k sin a cos b / sin eps
///   n_y = (cos a sin b + cos k sin a cos b) / sin eps
///   n_z = -sin k cos a cos b / sin eps
/// Throws GapClosed when sin eps(k) <= gap_tol.
Eigen::Vector3d bloch_vector(double alpha, double beta, double k,
                             double gap_tol = 1e-6);

struct MomentumSample {
  double k = 0.0;
  std::array<Complex, 2> eigenvalues{};
  std::array<Complex, 2> quasi_energies{};   // eps = i (Log lambda - eps0)
  std::optional<Eigen::Vector3d> bloch;      // Hermitian case, gap permitting
};

/// Diagonalize u(k) on the uniform grid k_j = -pi + 2 pi j / num_k.
/// Samples are ordered by k. Requires num_k >= 2 and l1*l2 > 0.
std::vector<MomentumSample> quasienergy_spectrum(const WalkParams& params,
                                                 int num_k);

enum class PTTag { Unbroken, BrokenZero, BrokenPi };

struct PTPhase {
  PTTag tag = PTTag::Unbroken;
  double max_modulus_split = 0.0;  // max over k of max|lambda| / (l1 l2) - 1
};

const char* to_string(PTTag tag);

/// Classify the PT phase from eigenvalue moduli on a num_k grid. Unbroken iff
/// every modulus equals l1*l2 within tol (relative); otherwise tagged by the
/// quasi-energy real part at the k of maximal splitting, snapped to 0 or pi.
/// Throws UnclassifiableBrokenPhase if that real part is farther than 0.2 rad
/// from both.
PTPhase pt_phase_classify(const WalkParams& params, int num_k = 1024,
                          double tol = 1e-6);

}  // namespace ptwalk

#endif  // PTWALK_MOMENTUM_SPACE_HPP
