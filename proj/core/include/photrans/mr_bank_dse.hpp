// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <optional>
#include <vector>

#include "photrans/device_models.hpp"

namespace photrans {

// One candidate bank design point. r_tune is always 2 * lambda_res / q_factor.
struct MrBankDesign {
  double r_tune_nm = 0.0;
  double q_factor = 0.0;
  double snr_db = 0.0;          // worst-case victim
  double snr_avg_db = 0.0;      // average victim, reported alongside
  double channel_spacing_nm = 0.0;
  int n_levels = 128;
  double fsr_nm = 20.0;
  double lambda_res_nm = 1550.0;
  bool feasible = false;        // r_tune strictly above the level-count bound
  double bound_nm = 0.0;        // the bound the design was checked against
};

struct DseGrid {
  double q_min = 2000.0, q_max = 8000.0, q_step = 100.0;
  double cs_min_nm = 0.1, cs_max_nm = 1.0, cs_step_nm = 0.1;
  int n_levels = 128;           // 8-bit signed-split
  double fsr_nm = 20.0;
  int num_channels = 17;
  double lambda_res_nm = 1550.0;
  double input_power_dbm = 0.0;
  double detector_sensitivity_dbm = -20.0;

  void validate() const;
  // Lattice values snapped to exact step multiples so e.g. 1.0 is hit exactly.
  std::vector<double> q_values() const;
  std::vector<double> cs_values() const;
};

// Evaluate one (Q, CS) lattice point: geometry, worst-case SNR, tunable
// range and the feasibility flag. Throws on geometry violations.
MrBankDesign evaluate_design(double q, double cs_nm, const DseGrid& grid);

// Exhaustive sweep; returns feasible designs ranked best first
// (r_tune desc, then snr desc, then cs desc), deterministic for any worker
// count. workers <= 1 runs single-threaded.
std::vector<MrBankDesign> explore(const DseGrid& grid, int workers = 1);

// Per channel-spacing column: the minimum feasible Q, or nullopt when the
// whole column is infeasible.
struct FrontierPoint {
  double cs_nm = 0.0;
  std::optional<double> min_feasible_q;
};
std::vector<FrontierPoint> feasibility_frontier(const DseGrid& grid);

}  // namespace photrans
