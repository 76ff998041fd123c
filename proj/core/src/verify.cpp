// SPDX-License-Identifier: Apache-2.0
#include "photrans/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "photrans/arch_dse.hpp"
#include "photrans/arch_mapper.hpp"
#include "photrans/device_models.hpp"
#include "photrans/functional_sim.hpp"
#include "photrans/model_ir.hpp"
#include "photrans/mr_bank_dse.hpp"
#include "photrans/perf_engine.hpp"
#include "photrans/units.hpp"

namespace photrans {

namespace {

struct Suite {
  std::mt19937_64 rng;
  std::vector<CheckResult> results;

  explicit Suite(std::uint64_t seed) : rng(seed) {}

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * (double(rng() >> 11) * (1.0 / 9007199254740992.0));
  }
  int uniform_int(int lo, int hi) { return lo + int(rng() % std::uint64_t(hi - lo + 1)); }

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    results.push_back({name, ok, detail});
  }

  template <typename Fn>
  void property(const std::string& name, int cases, Fn&& fn) {
    for (int i = 0; i < cases; ++i) {
      std::string why;
      if (!fn(why)) {
        std::ostringstream os;
        os << "case " << i << (why.empty() ? "" : ": " + why);
        check(name, false, os.str());
        return;
      }
    }
    check(name, true, std::to_string(cases) + " cases");
  }
};

Matrix random_matrix(Suite& s, int rows, int cols, double scale = 1.0) {
  Matrix m(rows, cols);
  for (double& v : m.data) v = s.uniform(-scale, scale);
  return m;
}

void crosstalk_properties(Suite& s) {
  s.property("crosstalk.bounds_and_identity", 1000, [&](std::string&) {
    const double lj = s.uniform(1300, 1700);
    const double q = s.uniform(500, 20000);
    const double d = s.uniform(-5, 5);
    const double phi = crosstalk_coefficient(lj + d, lj, q);
    const double at_zero = crosstalk_coefficient(lj, lj, q);
    return phi > 0.0 && phi <= 1.0 && at_zero == 1.0 && (d == 0.0 || phi < 1.0);
  });
  s.property("crosstalk.monotone_in_detuning_and_q", 1000, [&](std::string&) {
    const double lj = s.uniform(1300, 1700);
    const double q = s.uniform(500, 20000);
    const double d1 = s.uniform(0.01, 3.0);
    const double d2 = d1 + s.uniform(0.01, 3.0);
    const double q2 = q * s.uniform(1.01, 3.0);
    return crosstalk_coefficient(lj + d2, lj, q) < crosstalk_coefficient(lj + d1, lj, q) &&
           crosstalk_coefficient(lj + d1, lj, q2) < crosstalk_coefficient(lj + d1, lj, q);
  });
  s.property("crosstalk.symmetric_in_detuning_sign", 1000, [&](std::string&) {
    const double lj = s.uniform(1300, 1700);
    const double q = s.uniform(500, 20000);
    const double d = s.uniform(0.0, 3.0);
    const double a = crosstalk_coefficient(lj + d, lj, q);
    const double b = crosstalk_coefficient(lj - d, lj, q);
    return std::abs(a - b) <= 1e-15;
  });
  s.property("through_suppression.in_unit_interval_and_monotone", 1000, [&](std::string&) {
    BankGeometry bank;
    bank.q_factor = s.uniform(1000, 10000);
    bank.num_channels = s.uniform_int(1, 19);
    bank.channel_spacing_nm = s.uniform(0.1, 1.0);
    const double li = bank.wavelength_nm(s.uniform_int(0, bank.num_channels - 1));
    double prev = 1.0;
    for (int j = 0; j < bank.num_channels; ++j) {
      const double psi = through_suppression(li, j, bank);
      if (!(psi > 0.0 && psi <= 1.0 && psi <= prev + 1e-15)) return false;
      prev = psi;
    }
    return through_suppression(li, 0, bank) == 1.0;
  });
}

void snr_properties(Suite& s) {
  s.check("bank_snr.monotone_in_q_grid", [] {
    for (double cs : {0.1, 0.5, 1.0}) {
      double prev = -std::numeric_limits<double>::infinity();
      for (double q = 2000; q <= 8000; q += 100) {
        BankGeometry bank;
        bank.q_factor = q;
        bank.channel_spacing_nm = cs;
        const double v = bank_snr(bank).worst_db;
        if (!(v > prev)) return false;
        prev = v;
      }
    }
    return true;
  }());
  s.check("bank_snr.monotone_in_cs_grid", [] {
    for (double q : {2000.0, 5000.0, 8000.0}) {
      double prev = -std::numeric_limits<double>::infinity();
      for (int i = 1; i <= 10; ++i) {
        BankGeometry bank;
        bank.q_factor = q;
        bank.channel_spacing_nm = 0.1 * i;
        const double v = bank_snr(bank).worst_db;
        if (!(v > prev)) return false;
        prev = v;
      }
    }
    return true;
  }());
  s.check("bank_snr.decreasing_in_channel_count", [] {
    BankGeometry bank;
    double prev = std::numeric_limits<double>::infinity();
    for (int n = 2; n <= 17; ++n) {
      bank.num_channels = n;
      const double v = bank_snr(bank).worst_db;
      if (!(v < prev)) return false;
      prev = v;
    }
    return true;
  }());
  s.property("bank_snr.worst_victim_is_minimum", 200, [&](std::string&) {
    BankGeometry bank;
    bank.q_factor = s.uniform(2000, 8000);
    bank.channel_spacing_nm = s.uniform(0.1, 1.0);
    bank.num_channels = s.uniform_int(2, 19);
    const BankSnr snr = bank_snr(bank);
    for (int j = 0; j < bank.num_channels; ++j)
      if (bank_snr_db(j, bank) < snr.worst_db) return false;
    return snr.worst_db <= snr.average_db;
  });
  s.property("tunable_range.identity", 1000, [&](std::string&) {
    const double lam = s.uniform(1000, 2000);
    const double q = s.uniform(100, 100000);
    return tunable_range_nm(lam, q) * q == 2.0 * lam;
  });
  s.property("eq14.feasibility_monotone_in_cs", 300, [&](std::string&) {
    DseGrid grid;
    const double q = s.uniform(2000, 8000);
    const double cs = s.uniform(0.1, 0.9);
    const double cs2 = std::min(1.0, cs + s.uniform(0.0, 1.0 - cs));
    const MrBankDesign a = evaluate_design(q, cs, grid);
    const MrBankDesign b = evaluate_design(q, cs2, grid);
    return !a.feasible || b.feasible;
  });
  s.property("laser_power.additive", 1000, [&](std::string&) {
    const double l1 = s.uniform(0, 30), l2 = s.uniform(0, 30);
    const double sdet = s.uniform(-30, -10);
    const int n = s.uniform_int(1, 64);
    const double a = required_laser_power_dbm(l1 + l2, n, sdet);
    const double b = required_laser_power_dbm(l1, n, sdet) + l2;
    if (std::abs(a - b) > 1e-12) return false;
    const double dbl = required_laser_power_dbm(l1, 2 * n, sdet) -
                       required_laser_power_dbm(l1, n, sdet);
    return std::abs(dbl - 10.0 * std::log10(2.0)) < 1e-12;
  });
  s.property("dbm.roundtrip", 1000, [&](std::string&) {
    const double dbm = s.uniform(-60, 30);
    const double back = mw_to_dbm(dbm_to_mw(dbm));
    return std::abs(back - dbm) <= 1e-12 * std::max(1.0, std::abs(dbm));
  });
}

void dse_properties(Suite& s) {
  DseGrid grid;
  const auto ranked = explore(grid, 1);
  s.check("mrbank.explore_matches_brute_force", [&] {
    // Naive second sweep: evaluate everything, filter, sort by the ranking
    // key written out longhand.
    std::vector<MrBankDesign> brute;
    for (double q : grid.q_values())
      for (double cs : grid.cs_values()) {
        const MrBankDesign d = evaluate_design(q, cs, grid);
        if (d.feasible) brute.push_back(d);
      }
    std::stable_sort(brute.begin(), brute.end(), [](const auto& a, const auto& b) {
      if (a.r_tune_nm != b.r_tune_nm) return a.r_tune_nm > b.r_tune_nm;
      if (a.snr_db != b.snr_db) return a.snr_db > b.snr_db;
      return a.channel_spacing_nm > b.channel_spacing_nm;
    });
    if (brute.size() != ranked.size()) return false;
    for (std::size_t i = 0; i < brute.size(); ++i)
      if (brute[i].q_factor != ranked[i].q_factor ||
          brute[i].channel_spacing_nm != ranked[i].channel_spacing_nm)
        return false;
    return true;
  }());
  s.check("mrbank.deterministic_across_workers", [&] {
    for (int workers : {2, 4, 8}) {
      const auto other = explore(grid, workers);
      if (other.size() != ranked.size()) return false;
      for (std::size_t i = 0; i < ranked.size(); ++i)
        if (other[i].q_factor != ranked[i].q_factor || other[i].snr_db != ranked[i].snr_db)
          return false;
    }
    return true;
  }());
  s.check("mrbank.feasible_designs_satisfy_bound_strictly", [&] {
    for (const auto& d : ranked)
      if (!(d.r_tune_nm > min_tunable_range_nm(d.n_levels, d.snr_db))) return false;
    return true;
  }());
  s.check("mrbank.shrunk_grid_is_subset", [&] {
    DseGrid small = grid;
    small.q_min = 3000;
    small.q_max = 6000;
    small.cs_min_nm = 0.3;
    small.cs_max_nm = 0.8;
    for (const auto& d : explore(small, 1)) {
      const bool present = std::any_of(ranked.begin(), ranked.end(), [&](const auto& r) {
        return r.q_factor == d.q_factor && r.channel_spacing_nm == d.channel_spacing_nm;
      });
      if (!present) return false;
    }
    return true;
  }());
  s.check("mrbank.frontier_monotone_and_consistent", [&] {
    const auto frontier = feasibility_frontier(grid);
    double prev = std::numeric_limits<double>::infinity();
    for (const auto& p : frontier) {
      if (!p.min_feasible_q) continue;
      if (*p.min_feasible_q > prev) return false;
      prev = *p.min_feasible_q;
    }
    return !ranked.empty() && frontier.back().min_feasible_q &&
           *frontier.back().min_feasible_q == ranked.front().q_factor;
  }());
}

void tiling_properties(Suite& s) {
  s.property("tile_matmul.matches_greedy_packer", 1000, [&](std::string&) {
    const std::int64_t m = s.uniform_int(1, 40), p = s.uniform_int(1, 40),
                       c = s.uniform_int(1, 40), k = s.uniform_int(1, 16),
                       n = s.uniform_int(1, 16);
    // Greedy oracle: enumerate partial dot-products one at a time, k per pass.
    std::int64_t passes = 0, slots = 0;
    for (std::int64_t i = 0; i < m * c; ++i)
      for (std::int64_t chunk = 0; chunk < (p + n - 1) / n; ++chunk) {
        if (slots == 0) {
          ++passes;
          slots = k;
        }
        --slots;
      }
    return tile_matmul(m, p, c, k, n) == passes;
  });
  s.property("tile_matmul.doubling_never_increases", 1000, [&](std::string&) {
    const std::int64_t m = s.uniform_int(1, 100), p = s.uniform_int(1, 100),
                       c = s.uniform_int(1, 100), k = s.uniform_int(1, 64),
                       n = s.uniform_int(1, 64);
    return tile_matmul(m, p, c, 2 * k, n) <= tile_matmul(m, p, c, k, n) &&
           tile_matmul(m, p, c, k, 2 * n) <= tile_matmul(m, p, c, k, n);
  });
  s.check("map.work_conservation_builtins", [&] {
    for (const auto& model : builtin_models()) {
      const OpGraph g = lower(model);
      ArchConfig arch;
      arch.heads = 4;
      arch.layers = 2;
      arch.rows = 51;
      arch.cols = 17;
      std::int64_t graph_work = 0;
      for (const auto& n : g.nodes)
        if (n.kind == OpKind::matmul) graph_work += n.m * n.c * ((n.p + arch.cols - 1) / arch.cols);
      if (map(g, arch).total_pdp_work() != graph_work) return false;
    }
    return true;
  }());
}

void graph_properties(Suite& s) {
  s.check("model_ir.builtins_acyclic_and_shaped", [] {
    for (const auto& base : builtin_models())
      for (int seq : {1, 16, 128, 512}) {
        ModelSpec m = base;
        m.seq_len = seq;
        const OpGraph g = lower(m);
        if (!g.acyclic() || g.nodes.empty()) return false;
      }
    return true;
  }());
  s.check("model_ir.weight_sharing_changes_links_only", [] {
    ModelSpec bert = builtin_model("bert-base");
    ModelSpec albert = builtin_model("albert-base");
    const OpGraph a = lower(bert), b = lower(albert);
    if (a.nodes.size() != b.nodes.size() || op_count(a) != op_count(b)) return false;
    for (std::size_t i = 0; i < a.nodes.size(); ++i) {
      const auto& x = a.nodes[i];
      const auto& y = b.nodes[i];
      if (x.kind != y.kind || x.m != y.m || x.p != y.p || x.c != y.c || x.tag != y.tag)
        return false;
    }
    return true;
  }());
  s.check("model_ir.lowering_deterministic", [] {
    const ModelSpec m = builtin_model("transformer-base");
    const OpGraph a = lower(m), b = lower(m);
    if (a.nodes.size() != b.nodes.size() || a.edges != b.edges) return false;
    for (std::size_t i = 0; i < a.nodes.size(); ++i)
      if (a.nodes[i].id != b.nodes[i].id) return false;
    return true;
  }());
  s.check("model_ir.opcount_superlinear_in_seq", [] {
    for (const auto& base : builtin_models()) {
      ModelSpec m1 = base, m2 = base;
      m1.seq_len = 64;
      m2.seq_len = 128;
      if (!(op_count(lower(m2)) > 2 * op_count(lower(m1)))) return false;
    }
    return true;
  }());
}

void perf_properties(Suite& s) {
  const DeviceTable devices;
  const LossBudget losses;
  const ElectronicConstants electronics;
  const ModelSpec bert = builtin_model("bert-base");
  const OpGraph graph = lower(bert);

  s.property("perf.latency_monotone_in_k_and_n", 25, [&](std::string&) {
    ArchConfig a;
    a.heads = s.uniform_int(1, 8);
    a.layers = s.uniform_int(1, 4);
    a.rows = s.uniform_int(4, 32);
    a.cols = s.uniform_int(4, 16);
    ArchConfig bk = a, bn = a;
    bk.rows *= 2;
    bn.cols *= 2;
    const double base = simulate(graph, bert, a, devices, losses, electronics).total_latency_s;
    return simulate(graph, bert, bk, devices, losses, electronics).total_latency_s <= base &&
           simulate(graph, bert, bn, devices, losses, electronics).total_latency_s <= base;
  });
  s.property("perf.pipelined_never_slower", 25, [&](std::string&) {
    ArchConfig a;
    a.heads = s.uniform_int(1, 8);
    a.layers = s.uniform_int(1, 4);
    a.rows = s.uniform_int(4, 64);
    a.cols = s.uniform_int(4, 32);
    ArchConfig p = a;
    p.pipelined = true;
    return simulate(graph, bert, p, devices, losses, electronics).total_latency_s <=
           simulate(graph, bert, a, devices, losses, electronics).total_latency_s;
  });
  s.property("perf.identities_exact", 25, [&](std::string&) {
    ArchConfig a;
    a.heads = s.uniform_int(1, 12);
    a.layers = s.uniform_int(1, 6);
    a.rows = s.uniform_int(4, 64);
    a.cols = s.uniform_int(4, 32);
    const PerfReport r = simulate(graph, bert, a, devices, losses, electronics);
    const bool gops_ok = r.gops == double(r.total_ops) / r.total_latency_s / 1e9;
    const bool epb_ok =
        r.epb_j_per_bit == r.total_energy_j / (double(r.bits) * double(r.total_ops));
    const bool energy_ok =
        std::abs(r.total_energy_j - r.avg_power_w * r.total_latency_s) <=
        1e-9 * r.total_energy_j;
    double share = 0.0;
    for (const auto& [tag, t] : r.breakdown) share += t.power_share;
    return gops_ok && epb_ok && energy_ok && std::abs(share - 1.0) < 1e-9;
  });
  s.check("perf.energy_invariant_under_stage_split", [&] {
    Stage st;
    st.tag = UnitTag::ff_fc1;
    st.pass_count = 1000;
    st.census.dacs_input = 17;
    st.census.mrs_input = 867;
    st.census.vcsels = 51;
    st.census.pds_bpds = 51;
    st.census.adcs = 51;
    Stage half = st;
    half.pass_count = 500;
    const double lat = stage_latency_s(st, devices, electronics, false);
    const double lat_half = stage_latency_s(half, devices, electronics, false);
    const double p = stage_power_w(st, devices, electronics, 0.0);
    return std::abs(p * lat - 2.0 * p * lat_half) <= 1e-15 * p * lat;
  }());
  s.check("map.batch_factors_unit_when_hardware_covers", [&] {
    ArchConfig a;
    a.heads = 12;
    a.layers = 12;
    const MappedSchedule sched = map(graph, a);
    return sched.head_batch == 1 && sched.layer_batch == 1;
  }());
  s.check("map.softmax_never_shares_group_with_pre", [&] {
    ArchConfig a;
    a.heads = 4;
    a.layers = 2;
    const MappedSchedule sched = map(graph, a);
    for (std::size_t i = 0; i < sched.stages.size(); ++i)
      for (std::size_t j = 0; j < sched.stages.size(); ++j) {
        const auto& x = sched.stages[i];
        const auto& y = sched.stages[j];
        if (x.tag == UnitTag::softmax && y.tag == UnitTag::attention_head_pre_softmax &&
            x.layer_index == y.layer_index && x.mha_block == y.mha_block &&
            x.parallel_group == y.parallel_group)
          return false;
      }
    return true;
  }());
}

void arch_dse_properties(Suite& s) {
  const DeviceTable devices;
  const LossBudget losses;
  const ElectronicConstants electronics;
  ArchSearchSpace space;
  space.h_values = {1, 4};
  space.l_values = {1, 2};
  space.k_values = {12, 51};
  space.n_values = {12, 17};
  const auto result = explore_arch(space, devices, losses, electronics, 1);
  s.check("arch_dse.feasible_points_within_cap", [&] {
    for (const auto& p : result.feasible_ranked)
      if (!(p.peak_power_w <= space.power_cap_w)) return false;
    return true;
  }());
  s.check("arch_dse.ranking_matches_resort", [&] {
    auto pts = result.feasible_ranked;
    std::stable_sort(pts.begin(), pts.end(), [](const DsePoint& a, const DsePoint& b) {
      if (a.objective != b.objective) return a.objective < b.objective;
      if (a.peak_power_w != b.peak_power_w) return a.peak_power_w < b.peak_power_w;
      if (a.config.heads != b.config.heads) return a.config.heads < b.config.heads;
      if (a.config.layers != b.config.layers) return a.config.layers < b.config.layers;
      if (a.config.rows != b.config.rows) return a.config.rows < b.config.rows;
      return a.config.cols < b.config.cols;
    });
    for (std::size_t i = 0; i < pts.size(); ++i)
      if (pts[i].objective != result.feasible_ranked[i].objective) return false;
    return true;
  }());
  s.check("arch_dse.cap_tightening_never_improves", [&] {
    ArchSearchSpace tight = space;
    tight.power_cap_w = space.power_cap_w / 4.0;
    const auto tighter = explore_arch(tight, devices, losses, electronics, 1);
    if (tighter.feasible_ranked.empty()) return true;
    return tighter.feasible_ranked.front().objective >=
           result.feasible_ranked.front().objective;
  }());
  s.check("arch_dse.best_is_pareto_undominated", [&] {
    if (result.feasible_ranked.empty()) return true;
    const auto& best = result.feasible_ranked.front();
    for (const auto& p : result.feasible_ranked) {
      const bool dominates = p.avg_epb <= best.avg_epb && p.avg_gops >= best.avg_gops &&
                             (p.avg_epb < best.avg_epb || p.avg_gops > best.avg_gops);
      if (dominates) return false;
    }
    return true;
  }());
  s.check("arch_dse.deterministic_across_workers", [&] {
    for (int workers : {4, 8}) {
      const auto other = explore_arch(space, devices, losses, electronics, workers);
      if (other.feasible_ranked.size() != result.feasible_ranked.size()) return false;
      for (std::size_t i = 0; i < other.feasible_ranked.size(); ++i)
        if (other.feasible_ranked[i].objective != result.feasible_ranked[i].objective)
          return false;
    }
    return true;
  }());
}

void kernel_properties(Suite& s) {
  s.property("attention.reassociated_equals_reference", 64, [&](std::string& why) {
    const int seq = s.uniform_int(2, 64);
    const int d = s.uniform_int(2, 64);
    const int dk = s.uniform_int(1, 64);
    const Matrix x = random_matrix(s, seq, d);
    const Matrix wq = random_matrix(s, d, dk);
    const Matrix wk = random_matrix(s, d, dk);
    const Matrix wv = random_matrix(s, d, dk);
    const double err = max_abs_diff(attention_reference(x, wq, wk, wv, dk),
                                    attention_reassociated(x, wq, wk, wv, dk));
    if (err >= 1e-10) {
      why = "max abs err " + std::to_string(err);
      return false;
    }
    return true;
  });
  s.property("softmax.lse_matches_naive_and_normalizes", 1000, [&](std::string&) {
    const int n = s.uniform_int(1, 64);
    std::vector<double> chi(n);
    for (double& c : chi) c = s.uniform(-50, 50);
    const auto a = softmax_lse(chi);
    const auto b = softmax_naive(chi);
    double sum = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (std::abs(a[i] - b[i]) > 1e-12 || !(a[i] > 0.0)) return false;
      sum += a[i];
    }
    return std::abs(sum - 1.0) <= 1e-12;
  });
  s.property("softmax.lse_finite_at_extreme_magnitude", 200, [&](std::string&) {
    const int n = s.uniform_int(2, 32);
    std::vector<double> chi(n);
    for (double& c : chi) c = s.uniform(-1e4, 1e4);
    double sum = 0.0;
    for (double v : softmax_lse(chi)) {
      if (!std::isfinite(v)) return false;
      sum += v;
    }
    return std::abs(sum - 1.0) <= 1e-12;
  });
  s.property("gelu.monotone_on_tested_region", 1000, [&](std::string&) {
    const double x = s.uniform(-3, 3);
    const double y = x + s.uniform(1e-6, 0.5);
    if (std::abs(y) > 3) return true;
    return gelu_sigmoid(y) >= gelu_sigmoid(x);
  });
  s.property("gelu.reflection_identity", 1000, [&](std::string&) {
    const double x = s.uniform(-6, 6);
    return std::abs(gelu_sigmoid(x) + gelu_sigmoid(-x) - x) <= 1e-12 * std::max(1.0, std::abs(x));
  });
  s.property("quantize.error_bound_and_idempotent", 1000, [&](std::string&) {
    QuantConfig cfg;
    const double vmax = s.uniform(0.1, 10.0);
    const double v = s.uniform(-vmax, vmax);
    const QuantResult q = quantize_split(v, cfg, vmax);
    const double back = dequantize_split(q, cfg, vmax);
    if (std::abs(back - v) > vmax / (2.0 * (cfg.n_levels() - 1)) + 1e-15) return false;
    const QuantResult q2 = quantize_split(back, cfg, vmax);
    return q2.level == q.level && (q.level == 0 || q2.arm == q.arm);
  });
  s.property("bpd.antisymmetric_and_exact_split", 1000, [&](std::string&) {
    const int n = s.uniform_int(1, 32);
    std::vector<double> a(n), w(n), pos(n, 0.0), neg(n, 0.0);
    double direct = 0.0;
    for (int i = 0; i < n; ++i) {
      a[i] = s.uniform(-2, 2);
      w[i] = s.uniform(-2, 2);
      const double prod = a[i] * w[i];
      direct += prod;
      (prod >= 0 ? pos[i] : neg[i]) = std::abs(prod);
    }
    const double split = bpd_accumulate(pos, neg);
    if (std::abs(split - direct) > 1e-12) return false;
    return bpd_accumulate(pos, neg) == -bpd_accumulate(neg, pos);
  });
  s.property("shift_scale.exact_for_dk64", 1000, [&](std::string&) {
    const double v = s.uniform(-100, 100);
    return shift_scale(v, 64) == v / std::sqrt(64.0);
  });
  s.property("noisy_dot.deterministic_and_exact_at_infinite_snr", 200, [&](std::string&) {
    const int n = s.uniform_int(1, 17);
    std::vector<double> a(n), w(n);
    double direct = 0.0;
    for (int i = 0; i < n; ++i) {
      a[i] = s.uniform(-1, 1);
      w[i] = s.uniform(-1, 1);
      direct += a[i] * w[i];
    }
    const std::uint64_t seed = s.rng();
    if (noisy_dot(a, w, 24.3, seed) != noisy_dot(a, w, 24.3, seed)) return false;
    return std::abs(noisy_dot(a, w, 2000.0, seed) - direct) <= 1e-9;
  });
}

}  // namespace

std::vector<CheckResult> run_property_suite(std::uint64_t seed) {
  Suite s(seed);
  crosstalk_properties(s);
  snr_properties(s);
  dse_properties(s);
  tiling_properties(s);
  graph_properties(s);
  perf_properties(s);
  arch_dse_properties(s);
  kernel_properties(s);
  return std::move(s.results);
}

}  // namespace photrans
