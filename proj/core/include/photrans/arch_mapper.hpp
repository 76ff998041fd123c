// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "photrans/model_ir.hpp"

namespace photrans {

// Accelerator shape: H attention-head units per MHA unit, L physical unit
// sets, and K x N microring bank arrays.
struct ArchConfig {
  int heads = 4;
  int layers = 2;
  int rows = 51;
  int cols = 17;
  bool pipelined = false;
  double power_cap_w = 100.0;

  void validate() const;
};

// Per-stage device counts, totals across all units lit concurrently.
// dacs splits into input-imprint and weight-imprint so weight residency can
// idle the weight side only.
struct DeviceCensus {
  std::int64_t mrs_weight = 0;
  std::int64_t mrs_input = 0;
  std::int64_t vcsels = 0;
  std::int64_t pds_bpds = 0;
  std::int64_t dacs_input = 0;
  std::int64_t dacs_weight = 0;
  std::int64_t adcs = 0;
  std::int64_t soas = 0;
  std::int64_t memristors = 0;

  std::int64_t dacs() const { return dacs_input + dacs_weight; }
  std::int64_t mrs() const { return mrs_input + mrs_weight; }
};

struct Stage {
  UnitTag tag = UnitTag::attention_head_pre_softmax;
  std::int64_t pass_count = 1;
  std::int64_t pdp_work = 0;   // partial dot-products carried (matmul stages)
  DeviceCensus census;
  int parallel_group = 0;      // stages sharing a group overlap in time
  int lane = 0;                // serial lane inside the group (0=MHA, 1=FF)
  int layer_index = 0;
  int layer_slot = 0;          // physical set slot, section-relative % L
  int mha_set = 2;             // 0/1 = the two MHA sets, 2 = FF units
  int mha_block = 0;
  int concurrent_units = 1;
  bool weights_resident = false;
  bool uses_lut = false;
  bool is_softmax = false;
  bool activation_gelu = false;
  int arrays_in_optical_path = 2;  // loss path for the laser budget
  int waveguide_groups = 1;        // lit source groups per unit
};

struct MappedSchedule {
  ArchConfig arch;
  std::vector<Stage> stages;
  int model_heads = 0;
  int head_batch = 1;   // ceil(model heads / H)
  int layer_batch = 1;  // ceil(model layers / L)

  std::int64_t total_pdp_work() const;
};

struct MapOptions {
  // Pass count of the fused pre-softmax chain: max of the member matmuls
  // (optical lock-step pipeline) or, conservatively, their sum.
  bool fused_chain_sum = false;
};

// Pass count for one (m x p) * (p x c) matmul on a k x n bank array: each
// pass yields k partial dot-products of width n.
std::int64_t tile_matmul(std::int64_t m, std::int64_t p, std::int64_t c, std::int64_t k,
                         std::int64_t n);

// Map an operation graph onto the architecture. The per-head pre-softmax
// chain is fused into one stage; softmax serializes against it; the
// post-softmax and same-layer FF stages share a parallel group (two serial
// lanes that overlap in steady state). Deterministic.
MappedSchedule map(const OpGraph& graph, const ArchConfig& arch, const MapOptions& opts = {});

// Wavelengths demanded by the architecture: one per bank-array column.
int wavelength_demand(const ArchConfig& arch);

// Tabular dump: stage, unit_tag, passes, parallel_group, device counts.
std::string dump_schedule(const MappedSchedule& schedule);

}  // namespace photrans
