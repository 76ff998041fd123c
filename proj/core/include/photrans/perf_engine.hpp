// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "photrans/arch_mapper.hpp"
#include "photrans/device_models.hpp"
#include "photrans/model_ir.hpp"

namespace photrans {

// Electronic-side constants: buffer and softmax/LUT circuit costs enter as
// ingested numbers, never recomputed here.
struct ElectronicConstants {
  double buffer_access_energy_pj_per_byte = 0.18;
  double buffer_leakage_mw = 5.0;
  double softmax_digital_latency_ns = 2.0;
  double softmax_digital_power_mw = 12.0;
  double lut_access_latency_ns = 0.5;
  double lut_access_energy_pj = 1.2;

  void validate() const;
};

struct SimOptions {
  // Mean electro-optic tuning excursion. Negative selects the default: half
  // the tunable range at reference_bank_q (uniform parameter distribution).
  double eo_excursion_nm = -1.0;
  double reference_bank_q = 6500.0;
  double lambda_res_nm = 1550.0;
  double detector_sensitivity_dbm = -20.0;
  bool epb_per_activation = false;  // alternate energy-per-bit denominator
  MapOptions map_options;
};

struct TagShare {
  double latency_s = 0.0;
  double latency_share = 0.0;
  double power_w = 0.0;       // mean draw while stages of this tag are lit
  double power_share = 0.0;
};

struct Assumption {
  std::string name;
  std::string value;
  std::string provenance;  // "default" for every constant not taken from input
};

struct PerfReport {
  std::string model_name;
  ArchConfig arch;
  double total_latency_s = 0.0;
  double avg_power_w = 0.0;   // energy / latency over the executed schedule
  double peak_power_w = 0.0;  // all physical unit slots lit (streaming draw)
  double total_energy_j = 0.0;
  double gops = 0.0;
  double epb_j_per_bit = 0.0;
  double laser_power_w = 0.0;         // concurrent laser total across lit slots
  double to_locking_energy_j = 0.0;   // one-time thermal lock, reported apart
  std::int64_t total_ops = 0;
  int bits = 8;
  std::map<std::string, TagShare> breakdown;
  std::vector<Assumption> assumptions;
};

// Latency of one stage in seconds. Per-pass latency sums the latencies of
// the device classes the stage activates; pipelined mode overlaps passes at
// the slowest component.
double stage_latency_s(const Stage& stage, const DeviceTable& devices,
                       const ElectronicConstants& electronics, bool pipelined);

// Power drawn while the stage is lit, in watts: device census times per-class
// power, electro-optic tuning at the mean excursion, apportioned laser power
// and the electronic floor. Weight-imprint DACs idle when weights are
// resident.
double stage_power_w(const Stage& stage, const DeviceTable& devices,
                     const ElectronicConstants& electronics, double laser_w,
                     const SimOptions& opts = {});

// Laser power apportioned to one stage: the per-waveguide budget from the
// loss model times the concurrently lit waveguide count, zero for unlit
// stages.
double stage_laser_w(const Stage& stage, const ArchConfig& arch, const LossBudget& losses,
                     const SimOptions& opts = {});

PerfReport simulate(const OpGraph& graph, const ModelSpec& model, const ArchConfig& arch,
                    const DeviceTable& devices, const LossBudget& losses,
                    const ElectronicConstants& electronics, const SimOptions& opts = {});

// External platform numbers for ratio tables; source annotation is required.
struct Baseline {
  std::string label;
  std::string source;
  double gops = 0.0;
  double epb_j_per_bit = 0.0;
};

struct RatioRow {
  std::string label;
  double gops = 0.0;
  double epb_j_per_bit = 0.0;
  double gops_vs_first = 1.0;
  double epb_vs_first = 1.0;
};

// Pairwise GOPS and EPB ratios, normalized to the first entry.
std::vector<RatioRow> compare(const std::vector<std::pair<std::string, PerfReport>>& reports,
                              const std::vector<Baseline>& baselines = {});

}  // namespace photrans
