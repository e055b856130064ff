#include "ptwalk/scan_engine.hpp"

#include <algorithm>
#include <cmath>

#include "ptwalk/observables.hpp"
#include "ptwalk/parallel.hpp"

namespace ptwalk {

namespace {

std::optional<int> try_winding(double alpha_rad, double beta_rad, int num_k) {
  try {
    return winding_number(alpha_rad, beta_rad, num_k).value;
  } catch (const GapClosed&) {
    return std::nullopt;
  } catch (const NonConvergent&) {
    return std::nullopt;
  }
}

std::optional<PTTag> try_pt_phase(const WalkParams& params, int num_k) {
  try {
    return pt_phase_classify(params, num_k).tag;
  } catch (const UnclassifiableBrokenPhase&) {
    return std::nullopt;
  }
}

void validate_common(const SweepSpec& spec) {
  if (spec.alpha.count < 1) throw InvalidArgument("alpha grid count must be >= 1");
  if (spec.beta_values_pi.empty()) throw InvalidArgument("no beta values given");
  if (spec.num_k < 2) throw InvalidArgument("num_k must be >= 2");
  if (!(spec.l1 >= 0.0 && spec.l1 <= 1.0 && spec.l2 >= 0.0 && spec.l2 <= 1.0)) {
    throw InvalidArgument("loss amplitudes must lie in [0, 1]");
  }
}

}  // namespace

std::vector<double> GridSpec::values_pi() const {
  std::vector<double> vals;
  vals.reserve(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) vals.push_back(value(j));
  return vals;
}

SweepResult run_sweep(const SweepSpec& spec) {
  validate_common(spec);
  if (spec.t_values.empty()) throw InvalidArgument("no t values given");
  for (int t : spec.t_values) {
    if (t < 1) throw InvalidArgument("sweep t values must be >= 1");
  }

  std::vector<double> betas = spec.beta_values_pi;
  std::sort(betas.begin(), betas.end());
  std::vector<int> ts = spec.t_values;
  std::sort(ts.begin(), ts.end());
  const int t_max = ts.back();
  const std::vector<double> alphas = spec.alpha.values_pi();
  const bool hermitian = spec.l1 == 1.0 && spec.l2 == 1.0;

  const std::size_t num_cells = betas.size() * alphas.size();
  std::vector<std::vector<SweepRow>> cell_rows(num_cells);

  parallel_for(num_cells, [&](std::size_t idx) {
    const std::size_t ia = idx % alphas.size();
    const std::size_t ib = idx / alphas.size();
    const double alpha_pi = alphas[ia];
    const double beta_pi = betas[ib];
    const WalkParams params(alpha_pi * kPi, beta_pi * kPi, spec.l1, spec.l2,
                            t_max);

    const GapReport gaps = gap_at(params.alpha, params.beta);
    const std::optional<int> winding =
        hermitian ? try_winding(params.alpha, params.beta, spec.num_k)
                  : std::nullopt;
    const std::optional<PTTag> pt = try_pt_phase(params, spec.num_k);

    const WalkerState start =
        new_state(2 * t_max, 0, spec.initial_coin);
    const std::vector<WalkerState> trajectory = evolve(start, params);
    const std::vector<ObservableRecord> records = observable_series(trajectory);

    std::vector<SweepRow>& rows = cell_rows[idx];
    rows.reserve(ts.size());
    for (int t : ts) {
      const ObservableRecord& rec = records[static_cast<std::size_t>(t)];
      SweepRow row;
      row.alpha_pi = alpha_pi;
      row.beta_pi = beta_pi;
      row.t = t;
      row.l1 = spec.l1;
      row.l2 = spec.l2;
      row.diffusion = rec.diffusion;
      row.entropy_bits = rec.entropy_bits;
      row.surviving_norm = rec.surviving_norm;
      row.winding = winding;
      row.gap_zero = gaps.gap_zero;
      row.gap_pi = gaps.gap_pi;
      row.pt_phase = pt;
      rows.push_back(row);
    }
  });

  SweepResult result;
  result.rows.reserve(num_cells * ts.size());
  for (const auto& rows : cell_rows) {
    result.rows.insert(result.rows.end(), rows.begin(), rows.end());
  }
  return result;
}

SweepResult run_pt_scan(const SweepSpec& spec) {
  validate_common(spec);
  std::vector<double> betas = spec.beta_values_pi;
  std::sort(betas.begin(), betas.end());
  const std::vector<double> alphas = spec.alpha.values_pi();

  const std::size_t num_cells = betas.size() * alphas.size();
  std::vector<SweepRow> rows(num_cells);
  parallel_for(num_cells, [&](std::size_t idx) {
    const std::size_t ia = idx % alphas.size();
    const std::size_t ib = idx / alphas.size();
    const WalkParams params(alphas[ia] * kPi, betas[ib] * kPi, spec.l1,
                            spec.l2, 0);
    SweepRow row;
    row.alpha_pi = alphas[ia];
    row.beta_pi = betas[ib];
    row.l1 = spec.l1;
    row.l2 = spec.l2;
    const GapReport gaps = gap_at(params.alpha, params.beta);
    row.gap_zero = gaps.gap_zero;
    row.gap_pi = gaps.gap_pi;
    row.pt_phase = try_pt_phase(params, spec.num_k);
    rows[idx] = row;
  });

  SweepResult result;
  result.rows = std::move(rows);
  return result;
}

SweepResult run_evolve(double alpha_pi, double beta_pi, double l1, double l2,
                       int t, Coin coin, int num_k) {
  if (t < 0) throw InvalidArgument("t must be >= 0");
  const WalkParams params(alpha_pi * kPi, beta_pi * kPi, l1, l2, t);
  const bool hermitian = l1 == 1.0 && l2 == 1.0;

  const GapReport gaps = gap_at(params.alpha, params.beta);
  const std::optional<int> winding =
      hermitian ? try_winding(params.alpha, params.beta, num_k) : std::nullopt;
  const std::optional<PTTag> pt = try_pt_phase(params, num_k);

  const WalkerState start = new_state(std::max(2 * t, 1), 0, coin);
  const std::vector<WalkerState> trajectory = evolve(start, params);
  const std::vector<ObservableRecord> records = observable_series(trajectory);

  SweepResult result;
  result.rows.reserve(records.size());
  for (const ObservableRecord& rec : records) {
    SweepRow row;
    row.alpha_pi = wrap_pi_units(alpha_pi);
    row.beta_pi = wrap_pi_units(beta_pi);
    row.t = rec.t;
    row.l1 = l1;
    row.l2 = l2;
    row.diffusion = rec.diffusion;
    row.entropy_bits = rec.entropy_bits;
    row.surviving_norm = rec.surviving_norm;
    row.winding = winding;
    row.gap_zero = gaps.gap_zero;
    row.gap_pi = gaps.gap_pi;
    row.pt_phase = pt;
    result.rows.push_back(row);
  }
  return result;
}

WindingRun run_winding(double alpha_pi, double beta_pi, int num_k) {
  const double alpha = wrap_pi_units(alpha_pi) * kPi;
  const double beta = wrap_pi_units(beta_pi) * kPi;
  WindingRun run;
  run.result = winding_number(alpha, beta, num_k);
  const GapReport gaps = gap_at(alpha, beta);

  SweepRow row;
  row.alpha_pi = wrap_pi_units(alpha_pi);
  row.beta_pi = wrap_pi_units(beta_pi);
  row.winding = run.result.value;
  row.gap_zero = gaps.gap_zero;
  row.gap_pi = gaps.gap_pi;
  row.pt_phase = PTTag::Unbroken;  // winding is Hermitian-only
  run.table.rows.push_back(row);
  return run;
}

PhaseDiagramResult run_phase_diagram(const GridSpec& alpha,
                                     const GridSpec& beta, int num_k) {
  if (alpha.count < 1 || beta.count < 1) {
    throw InvalidArgument("phase diagram grid counts must be >= 1");
  }
  PhaseDiagramResult result;
  result.alphas_pi = alpha.values_pi();
  result.betas_pi = beta.values_pi();

  std::vector<double> alphas_rad, betas_rad;
  for (double a : result.alphas_pi) alphas_rad.push_back(a * kPi);
  for (double b : result.betas_pi) betas_rad.push_back(b * kPi);
  const PhaseDiagramGrid grid = phase_diagram(alphas_rad, betas_rad, num_k);

  result.table.rows.reserve(grid.cells.size());
  for (std::size_t ib = 0; ib < result.betas_pi.size(); ++ib) {
    for (std::size_t ia = 0; ia < result.alphas_pi.size(); ++ia) {
      const PhaseDiagramCell& cell = grid.at(ia, ib);
      SweepRow row;
      row.alpha_pi = result.alphas_pi[ia];
      row.beta_pi = result.betas_pi[ib];
      row.gap_zero = cell.gaps.gap_zero;
      row.gap_pi = cell.gaps.gap_pi;
      if (cell.winding) row.winding = cell.winding->value;
      row.pt_phase = PTTag::Unbroken;  // Hermitian by construction
      result.table.rows.push_back(row);
    }
  }
  return result;
}

}  // namespace ptwalk
