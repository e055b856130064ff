#include "ptwalk/topology.hpp"

#include <Eigen/Geometry>

#include <algorithm>
#include <cmath>
#include <string>

#include "ptwalk/parallel.hpp"

namespace ptwalk {

GapReport gap_at(double alpha, double beta) {
  // cos eps is monotone in cos k, so the band edges sit at k = 0 and k = pi.
  const double eps_at_zero = std::abs(wrap_radians(alpha + beta));
  const double eps_at_pi = kPi - std::abs(wrap_radians(alpha - beta));
  GapReport report;
  report.gap_zero = std::min(eps_at_zero, eps_at_pi);
  report.gap_pi = kPi - std::max(eps_at_zero, eps_at_pi);
  return report;
}

WindingResult winding_number(double alpha, double beta, int num_k,
                             double gap_tol) {
  if (num_k < 4) throw InvalidArgument("winding quadrature needs num_k >= 4");
  const GapReport gaps = gap_at(alpha, beta);
  if (gaps.gap_zero <= gap_tol || gaps.gap_pi <= gap_tol) {
    throw GapClosed("gap closed at (alpha, beta) = (" + std::to_string(alpha) +
                    ", " + std::to_string(beta) + "); gaps (" +
                    std::to_string(gaps.gap_zero) + ", " +
                    std::to_string(gaps.gap_pi) + ")");
  }

  const std::size_t n = static_cast<std::size_t>(num_k);
  std::vector<Eigen::Vector3d> bloch(n);
  for (std::size_t j = 0; j < n; ++j) {
    const double k = -kPi + 2.0 * kPi * static_cast<double>(j) / num_k;
    bloch[j] = bloch_vector(alpha, beta, k, gap_tol);
  }

  const Eigen::Vector3d axis(std::cos(alpha), 0.0, std::sin(alpha));
  const double dk = 2.0 * kPi / num_k;
  double integral = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const Eigen::Vector3d& prev = bloch[(j + n - 1) % n];
    const Eigen::Vector3d& next = bloch[(j + 1) % n];
    const Eigen::Vector3d derivative = (next - prev) / (2.0 * dk);
    integral += bloch[j].cross(derivative).dot(axis) * dk;
  }

  WindingResult result;
  result.raw_integral = integral / (2.0 * kPi);
  result.value = static_cast<int>(std::lround(result.raw_integral));
  result.residual = std::abs(result.raw_integral - result.value);
  result.num_k_used = num_k;
  if (result.residual >= 0.01) {
    throw NonConvergent("winding integral " +
                        std::to_string(result.raw_integral) +
                        " is not within 0.01 of an integer at (alpha, beta) = (" +
                        std::to_string(alpha) + ", " + std::to_string(beta) +
                        ")");
  }
  return result;
}

PhaseDiagramGrid phase_diagram(const std::vector<double>& alpha_grid,
                               const std::vector<double>& beta_grid,
                               int num_k) {
  if (alpha_grid.empty() || beta_grid.empty()) {
    throw InvalidArgument("phase diagram grids must be non-empty");
  }
  PhaseDiagramGrid grid;
  grid.alphas = alpha_grid;
  grid.betas = beta_grid;
  grid.cells.resize(alpha_grid.size() * beta_grid.size());

  parallel_for(grid.cells.size(), [&](std::size_t idx) {
    const std::size_t ia = idx % alpha_grid.size();
    const std::size_t ib = idx / alpha_grid.size();
    const double alpha = alpha_grid[ia];
    const double beta = beta_grid[ib];
    PhaseDiagramCell cell;
    cell.gaps = gap_at(alpha, beta);
    try {
      cell.winding = winding_number(alpha, beta, num_k);
    } catch (const GapClosed&) {
      cell.winding = std::nullopt;  // boundary marker
    } catch (const NonConvergent& e) {
      throw NonConvergent("cell (" + std::to_string(ia) + ", " +
                          std::to_string(ib) + "): " + e.what());
    }
    grid.cells[idx] = cell;
  });
  return grid;
}

}  // namespace ptwalk
