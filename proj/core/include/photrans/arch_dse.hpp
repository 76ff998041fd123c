// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "photrans/perf_engine.hpp"

namespace photrans {

struct ArchSearchSpace {
  std::vector<int> h_values{1, 2, 4, 8, 12};
  std::vector<int> l_values{1, 2, 4, 6, 12};
  std::vector<int> k_values{8, 12, 19, 26, 33, 40, 47, 51, 58, 64};
  std::vector<int> n_values{8, 11, 12, 14, 17, 20, 23, 26, 29, 32};
  double power_cap_w = 100.0;
  bool pipelined = false;
  std::vector<ModelSpec> workloads;  // empty selects the four built-ins

  void validate() const;
};

// The datacenter and edge studies differ only in the cap.
ArchSearchSpace datacenter_space();
ArchSearchSpace edge_space();

struct DsePoint {
  ArchConfig config;
  double avg_epb = 0.0;
  double avg_gops = 0.0;
  double objective = 0.0;  // avg_epb / avg_gops, lower is better
  double peak_power_w = 0.0;
  bool feasible = false;
};

struct ArchDseResult {
  std::vector<DsePoint> feasible_ranked;  // objective asc, peak asc, config lex
  std::vector<DsePoint> all_points;       // lattice order, for scatter output
};

// Simulate every lattice configuration against every workload; feasibility is
// peak power within the cap. Deterministic for any worker count.
ArchDseResult explore_arch(const ArchSearchSpace& space, const DeviceTable& devices,
                           const LossBudget& losses, const ElectronicConstants& electronics,
                           int workers = 1, const SimOptions& opts = {});

}  // namespace photrans
