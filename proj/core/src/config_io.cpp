// SPDX-License-Identifier: Apache-2.0
#include "photrans/config_io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace photrans {

namespace {

nlohmann::json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error(path + ": cannot open");
  try {
    return nlohmann::json::parse(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

const nlohmann::json& need(const nlohmann::json& j, const std::string& key,
                           const std::string& ctx) {
  auto it = j.find(key);
  if (it == j.end()) throw std::runtime_error(ctx + ": missing key '" + key + "'");
  return *it;
}

double need_num(const nlohmann::json& j, const std::string& key, const std::string& ctx) {
  const auto& v = need(j, key, ctx);
  if (!v.is_number()) throw std::runtime_error(ctx + ": key '" + key + "' must be a number");
  return v.get<double>();
}

DeviceEntry need_device(const nlohmann::json& j, const std::string& key, const std::string& ctx) {
  const auto& d = need(j, key, ctx);
  DeviceEntry e;
  e.latency_ns = need_num(d, "latency_ns", ctx + "." + key);
  e.power = need_num(d, "power", ctx + "." + key);
  return e;
}

}  // namespace

DeviceTable load_device_table(const std::string& path) {
  const auto j = parse_file(path);
  const auto& devices = need(j, "devices", path);
  DeviceTable t;
  t.eo_tuning = need_device(devices, "eo_tuning", path);
  t.to_tuning = need_device(devices, "to_tuning", path);
  t.vcsel = need_device(devices, "vcsel", path);
  t.photodetector = need_device(devices, "photodetector", path);
  t.soa = need_device(devices, "soa", path);
  t.dac = need_device(devices, "dac", path);
  t.adc = need_device(devices, "adc", path);
  t.memristor_cell = need_device(devices, "memristor_cell", path);
  t.validate();
  return t;
}

LossBudget load_loss_budget(const std::string& path) {
  const auto j = parse_file(path);
  LossBudget b;
  b.waveguide_propagation_db_per_cm = need_num(j, "waveguide_propagation_db_per_cm", path);
  b.splitter_db = need_num(j, "splitter_db", path);
  b.combiner_db = need_num(j, "combiner_db", path);
  b.mr_through_db = need_num(j, "mr_through_db", path);
  b.mr_modulation_db = need_num(j, "mr_modulation_db", path);
  b.eo_tuning_db_per_cm = need_num(j, "eo_tuning_db_per_cm", path);
  b.path_length_cm = need_num(j, "path_length_cm", path);
  b.validate();
  return b;
}

ElectronicConstants load_electronic_constants(const std::string& path) {
  const auto j = parse_file(path);
  ElectronicConstants e;
  e.buffer_access_energy_pj_per_byte = need_num(j, "buffer_access_energy_pj_per_byte", path);
  e.buffer_leakage_mw = need_num(j, "buffer_leakage_mw", path);
  e.softmax_digital_latency_ns = need_num(j, "softmax_digital_latency_ns", path);
  e.softmax_digital_power_mw = need_num(j, "softmax_digital_power_mw", path);
  e.lut_access_latency_ns = need_num(j, "lut_access_latency_ns", path);
  e.lut_access_energy_pj = need_num(j, "lut_access_energy_pj", path);
  e.validate();
  return e;
}

ModelSpec load_model_spec(const std::string& path) {
  const auto j = parse_file(path);
  ModelSpec m;
  m.name = need(j, "name", path).get<std::string>();
  m.num_layers = int(need_num(j, "num_layers", path));
  m.num_heads = int(need_num(j, "num_heads", path));
  m.d_model = int(need_num(j, "d_model", path));
  m.d_ff = int(need_num(j, "d_ff", path));
  m.seq_len = int(need_num(j, "seq_len", path));
  if (j.contains("d_k")) m.d_k = int(need_num(j, "d_k", path));
  const std::string topo = need(j, "topology", path).get<std::string>();
  if (topo == "encoder_decoder")
    m.topology = Topology::encoder_decoder;
  else if (topo == "encoder_only")
    m.topology = Topology::encoder_only;
  else
    throw std::runtime_error(path + ": topology must be encoder_decoder or encoder_only");
  const std::string act = need(j, "activation", path).get<std::string>();
  if (act == "relu")
    m.activation = Activation::relu;
  else if (act == "gelu")
    m.activation = Activation::gelu;
  else
    throw std::runtime_error(path + ": activation must be relu or gelu");
  m.weight_sharing = need(j, "weight_sharing", path).get<bool>();
  m.bits = int(need_num(j, "bits", path));
  m.validate();
  return m;
}

std::vector<Baseline> load_baselines(const std::string& path) {
  const auto j = parse_file(path);
  const auto& arr = need(j, "baselines", path);
  std::vector<Baseline> out;
  for (const auto& b : arr) {
    Baseline bl;
    bl.label = need(b, "label", path).get<std::string>();
    bl.source = need(b, "source", path).get<std::string>();  // mandatory annotation
    bl.gops = need_num(b, "gops", path);
    bl.epb_j_per_bit = need_num(b, "epb_j_per_bit", path);
    if (bl.source.empty()) throw std::runtime_error(path + ": baseline source must be non-empty");
    out.push_back(bl);
  }
  return out;
}

namespace {

std::string format_double(double d) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12e", d);
  return buf;
}

void dump(const JsonValue& value, std::string& out) {
  struct Visitor {
    std::string& out;
    void operator()(std::nullptr_t) const { out += "null"; }
    void operator()(bool b) const { out += b ? "true" : "false"; }
    void operator()(std::int64_t i) const { out += std::to_string(i); }
    void operator()(double d) const { out += format_double(d); }
    void operator()(const std::string& s) const {
      out += '"';
      for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
      }
      out += '"';
    }
    void operator()(const JsonArray& a) const {
      out += '[';
      bool first = true;
      for (const auto& v : a) {
        if (!first) out += ',';
        first = false;
        dump(v, out);
      }
      out += ']';
    }
    void operator()(const JsonObject& o) const {
      out += '{';
      bool first = true;
      for (const auto& [k, v] : o) {  // std::map iterates in sorted key order
        if (!first) out += ',';
        first = false;
        out += '"' + k + "\":";
        dump(v, out);
      }
      out += '}';
    }
  };
  std::visit(Visitor{out}, value.v);
}

}  // namespace

std::string dump_json(const JsonValue& value) {
  std::string out;
  dump(value, out);
  out += '\n';
  return out;
}

JsonObject to_json(const PerfReport& r) {
  JsonObject o;
  o["schema_version"] = 1;
  o["model"] = r.model_name;
  o["arch"] = JsonObject{{"heads", r.arch.heads},
                         {"layers", r.arch.layers},
                         {"rows", r.arch.rows},
                         {"cols", r.arch.cols},
                         {"pipelined", r.arch.pipelined},
                         {"power_cap_w", r.arch.power_cap_w}};
  o["total_latency_s"] = r.total_latency_s;
  o["avg_power_w"] = r.avg_power_w;
  o["peak_power_w"] = r.peak_power_w;
  o["total_energy_j"] = r.total_energy_j;
  o["gops"] = r.gops;
  o["epb_j_per_bit"] = r.epb_j_per_bit;
  o["laser_power_w"] = r.laser_power_w;
  o["to_locking_energy_j"] = r.to_locking_energy_j;
  o["total_ops"] = r.total_ops;
  o["bits"] = r.bits;
  JsonObject breakdown;
  for (const auto& [tag, s] : r.breakdown)
    breakdown[tag] = JsonObject{{"latency_s", s.latency_s},
                                {"latency_share", s.latency_share},
                                {"power_w", s.power_w},
                                {"power_share", s.power_share}};
  o["breakdown"] = breakdown;
  JsonArray assumptions;
  for (const auto& a : r.assumptions)
    assumptions.push_back(
        JsonObject{{"name", a.name}, {"value", a.value}, {"provenance", a.provenance}});
  o["assumptions"] = assumptions;
  return o;
}

std::string breakdown_csv(const PerfReport& r) {
  std::string out = "unit_tag,latency_s,latency_share,power_w,power_share\n";
  for (const auto& [tag, s] : r.breakdown) {
    out += tag + "," + format_double(s.latency_s) + "," + format_double(s.latency_share) + "," +
           format_double(s.power_w) + "," + format_double(s.power_share) + "\n";
  }
  return out;
}

JsonObject to_json(const std::vector<MrBankDesign>& ranked, const DseGrid& grid) {
  JsonObject o;
  o["schema_version"] = 1;
  o["grid"] = JsonObject{{"q_min", grid.q_min},
                         {"q_max", grid.q_max},
                         {"q_step", grid.q_step},
                         {"cs_min_nm", grid.cs_min_nm},
                         {"cs_max_nm", grid.cs_max_nm},
                         {"cs_step_nm", grid.cs_step_nm},
                         {"n_levels", grid.n_levels},
                         {"fsr_nm", grid.fsr_nm},
                         {"num_channels", grid.num_channels},
                         {"lambda_res_nm", grid.lambda_res_nm}};
  o["feasible_count"] = std::int64_t(ranked.size());
  JsonArray designs;
  for (const auto& d : ranked) {
    designs.push_back(JsonObject{{"r_tune_nm", d.r_tune_nm},
                                 {"q_factor", d.q_factor},
                                 {"snr_db", d.snr_db},
                                 {"snr_avg_db", d.snr_avg_db},
                                 {"channel_spacing_nm", d.channel_spacing_nm},
                                 {"bound_nm", d.bound_nm},
                                 {"feasible", d.feasible}});
  }
  o["ranked"] = designs;
  JsonArray defaults;
  defaults.push_back(JsonObject{{"name", "input_power_dbm"},
                                {"value", format_double(grid.input_power_dbm)},
                                {"provenance", "default"}});
  defaults.push_back(JsonObject{{"name", "detector_sensitivity_dbm"},
                                {"value", format_double(grid.detector_sensitivity_dbm)},
                                {"provenance", "default"}});
  defaults.push_back(JsonObject{
      {"name", "lambda_res_nm"},
      {"value", format_double(grid.lambda_res_nm)},
      {"provenance", "default: C-band"}});
  defaults.push_back(JsonObject{{"name", "snr_for_feasibility"},
                                {"value", "worst-case victim"},
                                {"provenance", "default; average also reported"}});
  o["assumptions"] = defaults;
  return o;
}

std::string mrbank_csv(const std::vector<MrBankDesign>& ranked) {
  std::string out = "rank,r_tune_nm,q_factor,snr_db,snr_avg_db,channel_spacing_nm,bound_nm\n";
  int rank = 1;
  for (const auto& d : ranked) {
    out += std::to_string(rank++) + "," + format_double(d.r_tune_nm) + "," +
           format_double(d.q_factor) + "," + format_double(d.snr_db) + "," +
           format_double(d.snr_avg_db) + "," + format_double(d.channel_spacing_nm) + "," +
           format_double(d.bound_nm) + "\n";
  }
  return out;
}

std::string frontier_csv(const std::vector<FrontierPoint>& frontier) {
  std::string out = "channel_spacing_nm,min_feasible_q\n";
  for (const auto& p : frontier) {
    out += format_double(p.cs_nm) + ",";
    out += p.min_feasible_q ? format_double(*p.min_feasible_q) : std::string("none");
    out += "\n";
  }
  return out;
}

JsonObject to_json(const ArchDseResult& result, const ArchSearchSpace& space, int top_k) {
  JsonObject o;
  o["schema_version"] = 1;
  o["power_cap_w"] = space.power_cap_w;
  o["lattice_points"] = std::int64_t(result.all_points.size());
  o["feasible_count"] = std::int64_t(result.feasible_ranked.size());
  JsonArray top;
  const int n = std::min<int>(top_k, int(result.feasible_ranked.size()));
  for (int i = 0; i < n; ++i) {
    const auto& p = result.feasible_ranked[i];
    top.push_back(JsonObject{{"heads", p.config.heads},
                             {"layers", p.config.layers},
                             {"rows", p.config.rows},
                             {"cols", p.config.cols},
                             {"avg_epb", p.avg_epb},
                             {"avg_gops", p.avg_gops},
                             {"objective", p.objective},
                             {"peak_power_w", p.peak_power_w}});
  }
  o["top"] = top;
  return o;
}

std::string arch_scatter_csv(const ArchDseResult& result) {
  std::string out = "heads,layers,rows,cols,objective,avg_epb,avg_gops,peak_power_w,feasible\n";
  for (const auto& p : result.all_points) {
    out += std::to_string(p.config.heads) + "," + std::to_string(p.config.layers) + "," +
           std::to_string(p.config.rows) + "," + std::to_string(p.config.cols) + "," +
           format_double(p.objective) + "," + format_double(p.avg_epb) + "," +
           format_double(p.avg_gops) + "," + format_double(p.peak_power_w) + "," +
           (p.feasible ? "1" : "0") + "\n";
  }
  return out;
}

std::string ratio_csv(const std::vector<RatioRow>& rows) {
  std::string out = "label,gops,epb_j_per_bit,gops_vs_first,epb_vs_first\n";
  for (const auto& r : rows) {
    out += r.label + "," + format_double(r.gops) + "," + format_double(r.epb_j_per_bit) + "," +
           format_double(r.gops_vs_first) + "," + format_double(r.epb_vs_first) + "\n";
  }
  return out;
}

void atomic_write(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error(tmp.string() + ": cannot open for writing");
    out << content;
    if (!out) throw std::runtime_error(tmp.string() + ": write failed");
  }
  fs::rename(tmp, target);
}

}  // namespace photrans
