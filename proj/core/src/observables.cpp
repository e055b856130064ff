#include "ptwalk/observables.hpp"

#include <cmath>
#include <string>

namespace ptwalk {

namespace {

void require_normalized(const ProbDist& dist, const char* op) {
  if (std::abs(dist.sum() - 1.0) > 1e-12) {
    throw NotNormalized(std::string(op) +
                        " requires a normalized distribution (sum = " +
                        std::to_string(dist.sum()) + ")");
  }
}

}  // namespace

std::pair<double, double> moments(const ProbDist& dist) {
  require_normalized(dist, "moments");
  double m1 = 0.0, m2 = 0.0;
  for (const auto& [x, p] : dist.entries) {
    m1 += x * p;
    m2 += static_cast<double>(x) * x * p;
  }
  return {m1, m2};
}

double variance_from_moments(double m1, double m2) {
  const double variance = m2 - m1 * m1;
  if (variance < -1e-12) {
    throw MomentConsistencyError("variance " + std::to_string(variance) +
                                 " is negative beyond rounding tolerance");
  }
  return variance < 0.0 ? 0.0 : variance;
}

double diffusion_coefficient(const ProbDist& dist, int t) {
  if (t == 0) throw DivisionByZeroStep("diffusion coefficient undefined at t = 0");
  if (t < 0) throw InvalidArgument("step count must be positive");
  require_normalized(dist, "diffusion_coefficient");
  const auto [m1, m2] = moments(dist);
  return variance_from_moments(m1, m2) / (2.0 * t);
}

double shannon_entropy(const ProbDist& dist) {
  require_normalized(dist, "shannon_entropy");
  double s = 0.0;
  for (const auto& [x, p] : dist.entries) {
    if (p > 0.0) s -= p * std::log2(p);
  }
  return s < 0.0 ? 0.0 : s;  // -0.0 from a delta distribution reads as 0
}

std::vector<ObservableRecord> observable_series(
    std::span<const WalkerState> trajectory) {
  if (trajectory.empty()) {
    throw InvalidArgument("observable_series needs a non-empty trajectory");
  }
  std::vector<ObservableRecord> records;
  records.reserve(trajectory.size());
  for (std::size_t i = 0; i < trajectory.size(); ++i) {
    const ProbDist dist = probability_distribution(trajectory[i], true);
    const double survival = dist.total_norm;
    const auto [m1_post, m2_post] = moments(dist);

    ObservableRecord rec;
    rec.t = static_cast<int>(i);
    rec.surviving_norm = survival;
    rec.m1 = survival * m1_post;
    rec.m2 = survival * m2_post;
    rec.variance = variance_from_moments(rec.m1, rec.m2);
    if (i > 0) rec.diffusion = rec.variance / (2.0 * static_cast<double>(i));
    rec.entropy_bits = shannon_entropy(dist);
    records.push_back(rec);
  }
  return records;
}

}  // namespace ptwalk
