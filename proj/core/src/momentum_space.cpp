#include "ptwalk/momentum_space.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ptwalk {

namespace {

constexpr Complex kI{0.0, 1.0};

double clamp_to_unit(double x) { return std::clamp(x, -1.0, 1.0); }

}  // namespace

std::array<Complex, 2> eigenvalues_2x2(const Eigen::Matrix2cd& m) {
  const Complex half_trace = 0.5 * (m(0, 0) + m(1, 1));
  const Complex det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  const Complex s = std::sqrt(half_trace * half_trace - det);
  return {half_trace + s, half_trace - s};
}

Eigen::Matrix2cd u_of_k(const WalkParams& params, double k) {
  const Complex phase_up = std::exp(kI * k);
  const Complex phase_down = std::exp(-kI * k);
  const double ca = std::cos(params.alpha), sa = std::sin(params.alpha);
  const double cb = std::cos(params.beta), sb = std::sin(params.beta);

  // m = T(k) C(alpha)
  Eigen::Matrix2cd m;
  m << phase_up * ca, phase_up * sa, phase_down * sa, -phase_down * ca;
  // m = L' (coin-swapped loss) applied on the left
  m.row(0) *= params.l2;
  m.row(1) *= params.l1;
  // m = C(beta) m
  Eigen::Matrix2cd r;
  r.row(0) = cb * m.row(0) + sb * m.row(1);
  r.row(1) = sb * m.row(0) - cb * m.row(1);
  // m = L T(k) r
  r.row(0) *= params.l1 * phase_up;
  r.row(1) *= params.l2 * phase_down;
  return r;
}

double quasienergy_hermitian(double alpha, double beta, double k) {
  const double rhs = -std::sin(alpha) * std::sin(beta) +
                     std::cos(k) * std::cos(alpha) * std::cos(beta);
  return std::acos(clamp_to_unit(rhs));
}

Eigen::Vector3d bloch_vector(double alpha, double beta, double k,
                             double gap_tol) {
  const double eps = quasienergy_hermitian(alpha, beta, k);
  const double sin_eps = std::sin(eps);
  if (sin_eps <= gap_tol) {
    throw GapClosed("quasi-energy gap closed at k=" + std::to_string(k));
  }
  const double ca = std::cos(alpha), sa = std::sin(alpha);
  const double cb = std::cos(beta), sb = std::sin(beta);
  const double ck = std::cos(k), sk = std::sin(k);
  return Eigen::Vector3d(sk * sa * cb / sin_eps,
                         (ca * sb + ck * sa * cb) / sin_eps,
                         -sk * ca * cb / sin_eps);
}

std::vector<MomentumSample> quasienergy_spectrum(const WalkParams& params,
                                                 int num_k) {
  if (num_k < 2) throw InvalidArgument("num_k must be >= 2");
  const double ll = params.l1 * params.l2;
  if (ll <= 0.0) throw InvalidArgument("spectrum requires l1*l2 > 0");
  const double eps0 = std::log(ll);

  std::vector<MomentumSample> samples;
  samples.reserve(static_cast<std::size_t>(num_k));
  for (int j = 0; j < num_k; ++j) {
    const double k = -kPi + 2.0 * kPi * j / num_k;
    MomentumSample s;
    s.k = k;
    s.eigenvalues = eigenvalues_2x2(u_of_k(params, k));
    for (int i = 0; i < 2; ++i) {
      s.quasi_energies[static_cast<std::size_t>(i)] =
          kI * (std::log(s.eigenvalues[static_cast<std::size_t>(i)]) - eps0);
    }
    if (params.hermitian()) {
      const double eps = quasienergy_hermitian(params.alpha, params.beta, k);
      if (std::sin(eps) > 1e-6) {
        s.bloch = bloch_vector(params.alpha, params.beta, k);
      }
    }
    samples.push_back(s);
  }
  return samples;
}

const char* to_string(PTTag tag) {
  switch (tag) {
    case PTTag::Unbroken: return "Unbroken";
    case PTTag::BrokenZero: return "BrokenZero";
    case PTTag::BrokenPi: return "BrokenPi";
  }
  return "Unbroken";
}

PTPhase pt_phase_classify(const WalkParams& params, int num_k, double tol) {
  if (num_k < 2) throw InvalidArgument("num_k must be >= 2");
  const double ll = params.l1 * params.l2;
  if (ll <= 0.0) throw InvalidArgument("PT classification requires l1*l2 > 0");

  double max_split = 0.0;
  Complex dominant = 0.0;
  for (int j = 0; j < num_k; ++j) {
    const double k = -kPi + 2.0 * kPi * j / num_k;
    const auto lam = eigenvalues_2x2(u_of_k(params, k));
    const Complex big =
        std::abs(lam[0]) >= std::abs(lam[1]) ? lam[0] : lam[1];
    const double split = std::abs(big) / ll - 1.0;
    if (split > max_split) {
      max_split = split;
      dominant = big;
    }
  }

  PTPhase phase;
  phase.max_modulus_split = max_split;
  if (max_split <= tol) {
    phase.tag = PTTag::Unbroken;
    return phase;
  }

  // Re(eps) = -arg(lambda) for the dominant eigenvalue; snap to {0, pi}.
  const double re_eps = -std::arg(dominant);
  const double dist_zero = std::abs(wrap_radians(re_eps));
  const double dist_pi = std::abs(wrap_radians(re_eps - kPi));
  const double nearest = std::min(dist_zero, dist_pi);
  if (nearest > 0.2) {
    throw UnclassifiableBrokenPhase(
        "broken-phase real part " + std::to_string(re_eps) +
        " is farther than 0.2 rad from both 0 and pi");
  }
  phase.tag = dist_zero <= dist_pi ? PTTag::BrokenZero : PTTag::BrokenPi;
  return phase;
}

}  // namespace ptwalk
