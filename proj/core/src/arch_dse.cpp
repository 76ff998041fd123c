// SPDX-License-Identifier: Apache-2.0
#include "photrans/arch_dse.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

#include "photrans/parallel.hpp"

namespace photrans {

void ArchSearchSpace::validate() const {
  if (h_values.empty() || l_values.empty() || k_values.empty() || n_values.empty())
    throw std::invalid_argument("ArchSearchSpace: empty range");
  if (!(power_cap_w > 0.0)) throw std::invalid_argument("ArchSearchSpace: cap must be > 0");
  for (int v : h_values)
    if (v < 1) throw std::invalid_argument("ArchSearchSpace: H values must be >= 1");
  for (int v : l_values)
    if (v < 1) throw std::invalid_argument("ArchSearchSpace: L values must be >= 1");
  for (int v : k_values)
    if (v < 1) throw std::invalid_argument("ArchSearchSpace: K values must be >= 1");
  for (int v : n_values)
    if (v < 1) throw std::invalid_argument("ArchSearchSpace: N values must be >= 1");
}

ArchSearchSpace datacenter_space() { return ArchSearchSpace{}; }

ArchSearchSpace edge_space() {
  ArchSearchSpace s;
  s.power_cap_w = 10.0;
  return s;
}

ArchDseResult explore_arch(const ArchSearchSpace& space, const DeviceTable& devices,
                           const LossBudget& losses, const ElectronicConstants& electronics,
                           int workers, const SimOptions& opts) {
  space.validate();
  const std::vector<ModelSpec> workloads =
      space.workloads.empty() ? builtin_models() : space.workloads;

  std::vector<OpGraph> graphs;
  graphs.reserve(workloads.size());
  for (const auto& m : workloads) graphs.push_back(lower(m));

  std::vector<ArchConfig> lattice;
  for (int h : space.h_values)
    for (int l : space.l_values)
      for (int k : space.k_values)
        for (int n : space.n_values) {
          ArchConfig c;
          c.heads = h;
          c.layers = l;
          c.rows = k;
          c.cols = n;
          c.pipelined = space.pipelined;
          c.power_cap_w = space.power_cap_w;
          lattice.push_back(c);
        }

  ArchDseResult result;
  result.all_points.resize(lattice.size());
  parallel_for_indexed(lattice.size(), workers, [&](std::size_t i) {
    DsePoint pt;
    pt.config = lattice[i];
    double epb_sum = 0.0, gops_sum = 0.0, peak = 0.0;
    for (std::size_t w = 0; w < workloads.size(); ++w) {
      const PerfReport rep =
          simulate(graphs[w], workloads[w], lattice[i], devices, losses, electronics, opts);
      epb_sum += rep.epb_j_per_bit;
      gops_sum += rep.gops;
      peak = std::max(peak, rep.peak_power_w);
    }
    pt.avg_epb = epb_sum / workloads.size();
    pt.avg_gops = gops_sum / workloads.size();
    pt.objective = pt.avg_epb / pt.avg_gops;
    pt.peak_power_w = peak;
    pt.feasible = peak <= space.power_cap_w;
    result.all_points[i] = pt;
  });

  for (const auto& pt : result.all_points)
    if (pt.feasible) result.feasible_ranked.push_back(pt);
  std::sort(result.feasible_ranked.begin(), result.feasible_ranked.end(),
            [](const DsePoint& a, const DsePoint& b) {
              return std::tie(a.objective, a.peak_power_w, a.config.heads, a.config.layers,
                              a.config.rows, a.config.cols) <
                     std::tie(b.objective, b.peak_power_w, b.config.heads, b.config.layers,
                              b.config.rows, b.config.cols);
            });
  return result;
}

}  // namespace photrans
