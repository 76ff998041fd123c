// SPDX-License-Identifier: Apache-2.0
#include "photrans/mr_bank_dse.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <tuple>

#include "photrans/parallel.hpp"

namespace photrans {

void DseGrid::validate() const {
  if (!(q_min <= q_max) || !(q_step > 0.0)) throw std::invalid_argument("DseGrid: bad Q range");
  if (!(cs_min_nm <= cs_max_nm) || !(cs_step_nm > 0.0))
    throw std::invalid_argument("DseGrid: bad CS range");
  if (n_levels < 1) throw std::invalid_argument("DseGrid: n_levels must be >= 1");
  if (num_channels < 1) throw std::invalid_argument("DseGrid: num_channels must be >= 1");
  if ((num_channels - 1) * cs_min_nm > fsr_nm)
    throw std::invalid_argument("DseGrid: channel comb exceeds FSR at minimum spacing");
}

namespace {
std::vector<double> lattice(double lo, double hi, double step) {
  // Snap to integer multiples of the step so decimal endpoints land exactly.
  std::vector<double> out;
  const long long k0 = std::llround(lo / step);
  for (long long k = k0;; ++k) {
    const double v = double(k) * step;
    if (v > hi + step * 0.5) break;
    out.push_back(v);
  }
  return out;
}
}  // namespace

std::vector<double> DseGrid::q_values() const { return lattice(q_min, q_max, q_step); }
std::vector<double> DseGrid::cs_values() const { return lattice(cs_min_nm, cs_max_nm, cs_step_nm); }

MrBankDesign evaluate_design(double q, double cs_nm, const DseGrid& grid) {
  grid.validate();
  BankGeometry bank;
  bank.q_factor = q;
  bank.channel_spacing_nm = cs_nm;
  bank.num_channels = grid.num_channels;
  bank.base_wavelength_nm = grid.lambda_res_nm;
  bank.fsr_nm = grid.fsr_nm;
  bank.input_power_dbm = grid.input_power_dbm;
  bank.detector_sensitivity_dbm = grid.detector_sensitivity_dbm;
  bank.validate();

  const BankSnr snr = bank_snr(bank);
  MrBankDesign d;
  d.q_factor = q;
  d.channel_spacing_nm = cs_nm;
  d.n_levels = grid.n_levels;
  d.fsr_nm = grid.fsr_nm;
  d.lambda_res_nm = grid.lambda_res_nm;
  d.r_tune_nm = tunable_range_nm(grid.lambda_res_nm, q);
  d.snr_db = snr.worst_db;
  d.snr_avg_db = snr.average_db;
  d.bound_nm = min_tunable_range_nm(grid.n_levels, snr.worst_db);
  d.feasible = d.r_tune_nm > d.bound_nm;
  return d;
}

namespace {
// Ranking key: r_tune desc, snr desc, cs desc. Total order; equal keys mean
// identical designs on a fixed grid.
bool better(const MrBankDesign& a, const MrBankDesign& b) {
  return std::tie(b.r_tune_nm, b.snr_db, b.channel_spacing_nm) <
         std::tie(a.r_tune_nm, a.snr_db, a.channel_spacing_nm);
}
}  // namespace

std::vector<MrBankDesign> explore(const DseGrid& grid, int workers) {
  grid.validate();
  const auto qs = grid.q_values();
  const auto css = grid.cs_values();
  std::vector<MrBankDesign> all(qs.size() * css.size());
  parallel_for_indexed(all.size(), workers, [&](std::size_t idx) {
    const double q = qs[idx / css.size()];
    const double cs = css[idx % css.size()];
    all[idx] = evaluate_design(q, cs, grid);
  });
  std::vector<MrBankDesign> feasible;
  feasible.reserve(all.size());
  for (const auto& d : all)
    if (d.feasible) feasible.push_back(d);
  std::sort(feasible.begin(), feasible.end(), better);
  return feasible;
}

std::vector<FrontierPoint> feasibility_frontier(const DseGrid& grid) {
  grid.validate();
  const auto qs = grid.q_values();
  std::vector<FrontierPoint> frontier;
  for (double cs : grid.cs_values()) {
    FrontierPoint p;
    p.cs_nm = cs;
    for (double q : qs) {
      if (evaluate_design(q, cs, grid).feasible) {
        p.min_feasible_q = q;
        break;
      }
    }
    frontier.push_back(p);
  }
  return frontier;
}

}  // namespace photrans
