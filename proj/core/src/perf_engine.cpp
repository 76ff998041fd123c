// SPDX-License-Identifier: Apache-2.0
#include "photrans/perf_engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <stdexcept>
#include <tuple>

#include "photrans/units.hpp"

namespace photrans {

void ElectronicConstants::validate() const {
  for (double v : {buffer_access_energy_pj_per_byte, buffer_leakage_mw, softmax_digital_latency_ns,
                   softmax_digital_power_mw, lut_access_latency_ns, lut_access_energy_pj}) {
    if (v < 0.0) throw std::invalid_argument("ElectronicConstants: entries must be >= 0");
  }
}

namespace {

double excursion_nm(const SimOptions& opts) {
  if (opts.eo_excursion_nm >= 0.0) return opts.eo_excursion_nm;
  return 0.5 * tunable_range_nm(opts.lambda_res_nm, opts.reference_bank_q);
}

double per_pass_ns(const Stage& s, const DeviceTable& d, const ElectronicConstants& e) {
  if (s.is_softmax)
    return e.softmax_digital_latency_ns + e.lut_access_latency_ns + d.memristor_cell.latency_ns;
  double ns = 0.0;
  if (s.census.dacs() > 0) ns += d.dac.latency_ns;
  if (s.census.mrs() > 0) ns += d.eo_tuning.latency_ns;
  if (s.census.vcsels > 0) ns += d.vcsel.latency_ns;
  if (s.census.pds_bpds > 0) ns += d.photodetector.latency_ns;
  if (s.census.adcs > 0) ns += d.adc.latency_ns;
  if (s.census.soas > 0) ns += d.soa.latency_ns;
  if (s.uses_lut) ns += d.memristor_cell.latency_ns + e.lut_access_latency_ns;
  return ns;
}

double max_component_ns(const Stage& s, const DeviceTable& d, const ElectronicConstants& e) {
  if (s.is_softmax)
    return std::max({e.softmax_digital_latency_ns, e.lut_access_latency_ns,
                     d.memristor_cell.latency_ns});
  double mx = 0.0;
  if (s.census.dacs() > 0) mx = std::max(mx, d.dac.latency_ns);
  if (s.census.mrs() > 0) mx = std::max(mx, d.eo_tuning.latency_ns);
  if (s.census.vcsels > 0) mx = std::max(mx, d.vcsel.latency_ns);
  if (s.census.pds_bpds > 0) mx = std::max(mx, d.photodetector.latency_ns);
  if (s.census.adcs > 0) mx = std::max(mx, d.adc.latency_ns);
  if (s.census.soas > 0) mx = std::max(mx, d.soa.latency_ns);
  if (s.uses_lut) mx = std::max({mx, d.memristor_cell.latency_ns, e.lut_access_latency_ns});
  return mx;
}

}  // namespace

double stage_latency_s(const Stage& stage, const DeviceTable& devices,
                       const ElectronicConstants& electronics, bool pipelined) {
  devices.validate();
  if (stage.pass_count < 1) throw std::invalid_argument("stage_latency: pass_count must be >= 1");
  const double pp = per_pass_ns(stage, devices, electronics);
  if (!pipelined) return stage.pass_count * pp * kNsToS;
  return ((stage.pass_count - 1) * max_component_ns(stage, devices, electronics) + pp) * kNsToS;
}

double stage_laser_w(const Stage& stage, const ArchConfig& arch, const LossBudget& losses,
                     const SimOptions& opts) {
  if (stage.waveguide_groups <= 0) return 0.0;
  const int n_lambda = wavelength_demand(arch);
  const double loss = photonic_loss_db(losses, n_lambda * stage.arrays_in_optical_path,
                                       stage.arrays_in_optical_path);
  const double per_wg_dbm =
      required_laser_power_dbm(loss, n_lambda, opts.detector_sensitivity_dbm);
  const double waveguides =
      double(arch.rows) * stage.waveguide_groups * std::max(stage.concurrent_units, 1);
  return dbm_to_mw(per_wg_dbm) * kMwToW * waveguides;
}

double stage_power_w(const Stage& stage, const DeviceTable& devices,
                     const ElectronicConstants& electronics, double laser_w,
                     const SimOptions& opts) {
  devices.validate();
  electronics.validate();
  const auto& c = stage.census;
  double mw = 0.0;
  mw += double(c.dacs_input) * devices.dac.power;
  if (!stage.weights_resident) mw += double(c.dacs_weight) * devices.dac.power;
  mw += double(c.vcsels) * devices.vcsel.power;
  mw += double(c.pds_bpds) * devices.photodetector.power;
  mw += double(c.adcs) * devices.adc.power;
  mw += double(c.soas) * devices.soa.power;
  mw += double(c.memristors) * devices.memristor_cell.power * kUwToMw;
  mw += double(c.mrs()) * devices.eo_tuning.power * kUwToMw * excursion_nm(opts);
  if (stage.is_softmax) mw += electronics.softmax_digital_power_mw * stage.concurrent_units;
  mw += electronics.buffer_leakage_mw;  // electronic floor
  return mw * kMwToW + laser_w;
}

namespace {

// Per-stage buffered traffic at the opto-electronic boundary: every pass
// lands K ADC samples that are buffered before reuse.
double stage_buffer_energy_j(const Stage& s, int bits, const ElectronicConstants& e) {
  if (s.census.adcs <= 0 && !s.is_softmax) return 0.0;
  const double samples = double(s.pass_count) * double(std::max<std::int64_t>(s.census.adcs, 1));
  const double bytes = samples * bits / 8.0;
  double j = bytes * e.buffer_access_energy_pj_per_byte * 1e-12;
  if (s.uses_lut) j += samples * e.lut_access_energy_pj * 1e-12;
  return j;
}

}  // namespace

PerfReport simulate(const OpGraph& graph, const ModelSpec& model, const ArchConfig& arch,
                    const DeviceTable& devices, const LossBudget& losses,
                    const ElectronicConstants& electronics, const SimOptions& opts) {
  model.validate();
  arch.validate();
  devices.validate();
  losses.validate();
  electronics.validate();

  const MappedSchedule sched = map(graph, arch, opts.map_options);

  PerfReport rep;
  rep.model_name = model.name;
  rep.arch = arch;
  rep.bits = model.bits;
  rep.total_ops = op_count(graph);

  // Latency: groups execute in order; lanes inside a group overlap, stages
  // inside a lane are serial.
  std::map<int, std::map<int, double>> group_lane_s;
  // Peak: one physical slot per (set, layer slot, block, tag); slots are all
  // lit in streaming steady state, stages folded onto the same slot are not.
  std::map<std::tuple<int, int, int, int>, double> slot_draw_w;
  std::map<std::tuple<int, int, int, int>, double> slot_laser_w;

  std::map<std::string, double> tag_energy_j, tag_latency_s, tag_power_sum;

  double energy_j = 0.0;
  for (const auto& s : sched.stages) {
    const double lat = stage_latency_s(s, devices, electronics, arch.pipelined);
    const double laser = stage_laser_w(s, arch, losses, opts);
    double power = stage_power_w(s, devices, electronics, laser, opts);
    const double buf_j = stage_buffer_energy_j(s, model.bits, electronics);
    power += buf_j / lat;  // fold access energy into draw so E = sum(P*T) holds
    energy_j += power * lat;

    group_lane_s[s.parallel_group][s.lane] += lat;
    const auto slot = std::make_tuple(s.mha_set, s.layer_slot, s.mha_block, int(s.tag));
    slot_draw_w[slot] = std::max(slot_draw_w[slot], power);
    slot_laser_w[slot] = std::max(slot_laser_w[slot], laser);

    const std::string tag = to_string(s.tag);
    tag_energy_j[tag] += power * lat;
    tag_latency_s[tag] += lat;
  }

  double latency_s = 0.0;
  for (const auto& [g, lanes] : group_lane_s) {
    double gmax = 0.0;
    for (const auto& [lane, t] : lanes) gmax = std::max(gmax, t);
    latency_s += gmax;
  }

  double peak_w = 0.0, laser_w = 0.0;
  for (const auto& [slot, w] : slot_draw_w) peak_w += w;
  for (const auto& [slot, w] : slot_laser_w) laser_w += w;

  rep.total_latency_s = latency_s;
  rep.total_energy_j = energy_j;
  rep.avg_power_w = energy_j / latency_s;
  rep.peak_power_w = peak_w;
  rep.laser_power_w = laser_w;
  rep.gops = double(rep.total_ops) / latency_s / 1e9;
  const double epb_den = opts.epb_per_activation
                             ? double(model.bits) * double(model.seq_len) * double(model.d_model)
                             : double(model.bits) * double(rep.total_ops);
  rep.epb_j_per_bit = energy_j / epb_den;

  // One-time thermal lock: every bank array settles once, half an FSR on
  // average, before inference begins.
  std::int64_t arrays = 0;
  for (const auto& s : sched.stages) arrays += s.census.mrs() / std::max(1LL, std::int64_t(arch.rows) * arch.cols);
  rep.to_locking_energy_j = double(arrays) * devices.to_tuning.power * kMwToW * 0.5 *
                            devices.to_tuning.latency_ns * kNsToS;

  double total_tag_latency = 0.0, total_tag_power = 0.0;
  for (const auto& [tag, t] : tag_latency_s) total_tag_latency += t;
  for (const auto& [tag, t] : tag_latency_s) {
    TagShare share;
    share.latency_s = t;
    share.latency_share = t / total_tag_latency;
    share.power_w = tag_energy_j[tag] / t;  // mean draw while lit
    rep.breakdown[tag] = share;
  }
  for (const auto& [tag, s] : rep.breakdown) total_tag_power += s.power_w;
  for (auto& [tag, s] : rep.breakdown) s.power_share = s.power_w / total_tag_power;

  const auto def = [&rep](std::string name, double v, std::string why) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", v);
    rep.assumptions.push_back({std::move(name), buf, std::move(why)});
  };
  def("eo_excursion_nm", excursion_nm(opts),
      opts.eo_excursion_nm >= 0 ? "configured" : "default: half tunable range at reference Q");
  def("reference_bank_q", opts.reference_bank_q, "default");
  def("lambda_res_nm", opts.lambda_res_nm, "default: C-band");
  def("detector_sensitivity_dbm", opts.detector_sensitivity_dbm, "default");
  rep.assumptions.push_back({"dac_count", "N per bank array, one per column", "default"});
  rep.assumptions.push_back({"adc_count", "K per stage, one per BPD output", "default"});
  rep.assumptions.push_back({"peak_power", "streaming draw, all unit slots lit", "default"});
  rep.assumptions.push_back(
      {"breakdown_power", "mean draw while stages of the tag are lit", "default"});
  rep.assumptions.push_back({"epb_denominator",
                             opts.epb_per_activation ? "bits x input activations"
                                                     : "bits x op count",
                             opts.epb_per_activation ? "configured" : "default"});
  rep.assumptions.push_back(
      {"layernorm_ops", "1 op per element, statistics folded into ring tuning", "default"});
  rep.assumptions.push_back({"softmax_ops", "5 ops per element", "default"});
  rep.assumptions.push_back(
      {"to_tuning", "steady-state inference excluded; one-time lock reported", "default"});
  rep.assumptions.push_back(
      {"idle_units", "zero static and dynamic power", "default"});
  if (model.seq_len == 128 || model.seq_len == 197)
    rep.assumptions.push_back({"seq_len", std::to_string(model.seq_len), "model default"});
  return rep;
}

std::vector<RatioRow> compare(const std::vector<std::pair<std::string, PerfReport>>& reports,
                              const std::vector<Baseline>& baselines) {
  if (reports.empty()) throw std::invalid_argument("compare: need at least one report");
  for (const auto& b : baselines)
    if (b.source.empty())
      throw std::invalid_argument("compare: baseline '" + b.label + "' missing source annotation");
  std::vector<RatioRow> rows;
  for (const auto& [label, rep] : reports)
    rows.push_back({label, rep.gops, rep.epb_j_per_bit, 1.0, 1.0});
  for (const auto& b : baselines) rows.push_back({b.label, b.gops, b.epb_j_per_bit, 1.0, 1.0});
  const double g0 = rows.front().gops;
  const double e0 = rows.front().epb_j_per_bit;
  for (auto& r : rows) {
    r.gops_vs_first = r.gops / g0;
    r.epb_vs_first = r.epb_j_per_bit / e0;
  }
  return rows;
}

}  // namespace photrans
