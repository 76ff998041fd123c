// SPDX-License-Identifier: Apache-2.0
#include "photrans/arch_mapper.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace photrans {

void ArchConfig::validate() const {
  if (heads < 1 || layers < 1 || rows < 1 || cols < 1)
    throw std::invalid_argument("ArchConfig: H, L, K, N must all be >= 1");
  if (!(power_cap_w > 0.0)) throw std::invalid_argument("ArchConfig: power cap must be > 0");
}

std::int64_t tile_matmul(std::int64_t m, std::int64_t p, std::int64_t c, std::int64_t k,
                         std::int64_t n) {
  if (m < 1 || p < 1 || c < 1 || k < 1 || n < 1)
    throw std::invalid_argument("tile_matmul: all dimensions must be >= 1");
  const std::int64_t partials = m * c * ((p + n - 1) / n);
  return (partials + k - 1) / k;
}

int wavelength_demand(const ArchConfig& arch) {
  arch.validate();
  return arch.cols;
}

std::int64_t MappedSchedule::total_pdp_work() const {
  std::int64_t total = 0;
  for (const auto& s : stages) total += s.pdp_work;
  return total;
}

namespace {

// All nodes of one (layer, mha_block) grouped by tag.
struct LayerNodes {
  std::vector<const OpNode*> by_tag[9];
};

std::int64_t partials_of(const OpNode& n, std::int64_t cols) {
  return n.m * n.c * ((n.p + cols - 1) / cols);
}

bool node_weights_shared(const OpNode& n) { return n.shares_weights_with >= 0; }

}  // namespace

MappedSchedule map(const OpGraph& graph, const ArchConfig& arch, const MapOptions& opts) {
  arch.validate();
  if (graph.nodes.empty()) throw std::invalid_argument("map: empty graph");

  const std::int64_t K = arch.rows;
  const std::int64_t N = arch.cols;

  // Group nodes by (layer, block); track the model's head count.
  std::map<std::pair<int, int>, LayerNodes> blocks;
  int model_heads = 0;
  int max_layer = 0;
  bool has_decoder = false;
  for (const auto& n : graph.nodes) {
    blocks[{n.layer_index, n.tag == UnitTag::ff_fc1 || n.tag == UnitTag::ff_activation ||
                                   n.tag == UnitTag::ff_fc2 || n.tag == UnitTag::ff_addnorm
                               ? 0
                               : n.mha_block}]
        .by_tag[int(n.tag)]
        .push_back(&n);
    model_heads = std::max(model_heads, n.head_index + 1);
    max_layer = std::max(max_layer, n.layer_index);
    has_decoder = has_decoder || n.decoder;
  }
  if (model_heads == 0) throw std::invalid_argument("map: graph has no attention heads");

  MappedSchedule sched;
  sched.arch = arch;
  sched.model_heads = model_heads;
  const int units = std::min(arch.heads, model_heads);
  sched.head_batch = (model_heads + arch.heads - 1) / arch.heads;
  const int total_layers = max_layer + 1;
  const int section_layers = has_decoder ? total_layers / 2 : total_layers;
  sched.layer_batch = (section_layers + arch.layers - 1) / arch.layers;

  int group = 0;
  for (int layer = 0; layer < total_layers; ++layer) {
    const bool decoder = has_decoder && layer >= section_layers;
    const int rel_layer = decoder ? layer - section_layers : layer;
    const int slot = rel_layer % arch.layers;
    const bool preloaded = rel_layer < arch.layers;

    const int n_blocks = decoder ? 2 : 1;
    int tail_group = -1;
    for (int block = 0; block < n_blocks; ++block) {
      auto it = blocks.find({layer, block});
      if (it == blocks.end()) continue;
      const LayerNodes& ln = it->second;
      // Encoder attention runs on the second MHA set; decoder self-attention
      // on the first, cross-attention on the second.
      const int mha_set = decoder ? block : 1;

      const auto& pre_nodes = ln.by_tag[int(UnitTag::attention_head_pre_softmax)];
      const auto& sm_nodes = ln.by_tag[int(UnitTag::softmax)];
      const auto& post_nodes = ln.by_tag[int(UnitTag::attention_head_post_softmax)];
      if (pre_nodes.empty() || sm_nodes.empty() || post_nodes.empty())
        throw std::invalid_argument("map: attention block missing stages");

      const bool shared = node_weights_shared(*pre_nodes.front());
      const bool resident = shared || preloaded;

      // Fused pre-softmax stage: the reassociated chain plus the value
      // projection, cascaded optically with no intermediate buffering.
      Stage pre;
      pre.tag = UnitTag::attention_head_pre_softmax;
      pre.layer_index = layer;
      pre.layer_slot = slot;
      pre.mha_set = mha_set;
      pre.mha_block = block;
      pre.concurrent_units = units;
      pre.weights_resident = resident;
      pre.parallel_group = group++;
      std::int64_t per_head = 0;
      for (const OpNode* n : pre_nodes) {
        if (n->head_index != pre_nodes.front()->head_index) continue;
        const std::int64_t t = tile_matmul(n->m, n->p, n->c, K, N);
        per_head = opts.fused_chain_sum ? per_head + t : std::max(per_head, t);
      }
      pre.pass_count = per_head * sched.head_batch;
      for (const OpNode* n : pre_nodes) pre.pdp_work += partials_of(*n, N);
      pre.census.mrs_input = 2 * K * N * units;   // activation imprint: X and X^T
      pre.census.mrs_weight = 3 * K * N * units;  // W_Q, W_K^T, W_V
      pre.census.vcsels = K * units;
      pre.census.pds_bpds = 2 * K * units;
      pre.census.dacs_input = 2 * N * units;
      pre.census.dacs_weight = 3 * N * units;
      pre.census.adcs = K * units;
      pre.census.memristors = K * N * units;  // analog V staging
      pre.arrays_in_optical_path = 4;
      pre.waveguide_groups = 2;  // score chain and value branch
      sched.stages.push_back(pre);

      // Softmax serializes against the whole pre-softmax chain.
      Stage sm;
      sm.tag = UnitTag::softmax;
      sm.layer_index = layer;
      sm.layer_slot = slot;
      sm.mha_set = mha_set;
      sm.mha_block = block;
      sm.concurrent_units = units;
      sm.parallel_group = group++;
      sm.is_softmax = true;
      sm.uses_lut = true;
      sm.pass_count = std::int64_t(sm_nodes.front()->m) * sched.head_batch;  // one per row
      sm.census.memristors = K * N * units;  // ln/exp lookup cells
      sm.waveguide_groups = 0;
      sched.stages.push_back(sm);

      // Tail: score*V plus linear and add/norm; overlaps the FF lane for the
      // block that feeds the FF unit.
      tail_group = group++;
      Stage post;
      post.tag = UnitTag::attention_head_post_softmax;
      post.layer_index = layer;
      post.layer_slot = slot;
      post.mha_set = mha_set;
      post.mha_block = block;
      post.concurrent_units = units;
      post.parallel_group = tail_group;
      post.uses_lut = true;  // score and V arrays are driven from memristor cells
      post.pass_count = tile_matmul(post_nodes.front()->m, post_nodes.front()->p,
                                    post_nodes.front()->c, K, N) *
                        sched.head_batch;
      for (const OpNode* n : post_nodes) post.pdp_work += partials_of(*n, N);
      post.census.mrs_input = 2 * K * N * units;
      post.census.vcsels = K * units;
      post.census.pds_bpds = K * units;
      post.census.adcs = K * units;
      post.census.memristors = 2 * K * N * units;
      post.arrays_in_optical_path = 2;
      sched.stages.push_back(post);

      for (const OpNode* n : ln.by_tag[int(UnitTag::mha_linear)]) {
        if (n->kind != OpKind::matmul) continue;  // concat moves no data optically
        Stage lin;
        lin.tag = UnitTag::mha_linear;
        lin.layer_index = layer;
        lin.layer_slot = slot;
        lin.mha_set = mha_set;
        lin.mha_block = block;
        lin.parallel_group = tail_group;
        lin.weights_resident = node_weights_shared(*n) || preloaded;
        lin.pass_count = tile_matmul(n->m, n->p, n->c, K, N);
        lin.pdp_work = partials_of(*n, N);
        lin.census.mrs_input = K * N;
        lin.census.mrs_weight = K * N;
        lin.census.vcsels = K;
        lin.census.pds_bpds = K;
        lin.census.adcs = K;
        lin.census.dacs_input = N;
        lin.census.dacs_weight = N;
        lin.arrays_in_optical_path = 2;
        sched.stages.push_back(lin);
      }

      const auto& an_nodes = ln.by_tag[int(UnitTag::mha_addnorm)];
      if (!an_nodes.empty()) {
        const OpNode* n = an_nodes.front();
        Stage an;
        an.tag = UnitTag::mha_addnorm;
        an.layer_index = layer;
        an.layer_slot = slot;
        an.mha_set = mha_set;
        an.mha_block = block;
        an.parallel_group = tail_group;
        an.pass_count = (n->m * n->p + K - 1) / K;
        an.census.mrs_input = K;  // normalization rings
        an.census.vcsels = 2 * K; // coherent-summation laser pairs
        an.census.pds_bpds = K;
        an.census.adcs = K;
        an.arrays_in_optical_path = 1;
        an.waveguide_groups = 2;
        sched.stages.push_back(an);
      }
    }

    // FF unit; its matmuls overlap the post-softmax part of the attention
    // block that feeds it.
    auto it = blocks.find({layer, 0});
    if (it == blocks.end()) continue;
    const LayerNodes& ln = it->second;
    const bool shared_ff = !ln.by_tag[int(UnitTag::ff_fc1)].empty() &&
                           node_weights_shared(*ln.by_tag[int(UnitTag::ff_fc1)].front());
    const bool resident_ff = shared_ff || preloaded;
    auto add_fc = [&](UnitTag tag) {
      for (const OpNode* n : ln.by_tag[int(tag)]) {
        Stage fc;
        fc.tag = tag;
        fc.layer_index = layer;
        fc.layer_slot = slot;
        fc.mha_set = 2;
        fc.parallel_group = tail_group;
        fc.lane = 1;
        fc.weights_resident = resident_ff;
        fc.pass_count = tile_matmul(n->m, n->p, n->c, K, N);
        fc.pdp_work = partials_of(*n, N);
        fc.census.mrs_input = K * N;
        fc.census.mrs_weight = K * N;
        fc.census.vcsels = K;
        fc.census.pds_bpds = K;
        fc.census.adcs = K;
        fc.census.dacs_input = N;
        fc.census.dacs_weight = N;
        fc.arrays_in_optical_path = 2;
        sched.stages.push_back(fc);
      }
    };
    add_fc(UnitTag::ff_fc1);
    for (const OpNode* n : ln.by_tag[int(UnitTag::ff_activation)]) {
      Stage act;
      act.tag = UnitTag::ff_activation;
      act.layer_index = layer;
      act.layer_slot = slot;
      act.mha_set = 2;
      act.parallel_group = tail_group;
      act.lane = 1;
      act.pass_count = (n->m * n->p + K - 1) / K;
      act.census.soas = K;
      act.census.vcsels = K;
      act.census.pds_bpds = K;
      act.census.adcs = K;
      if (n->kind == OpKind::gelu) {
        act.activation_gelu = true;
        act.uses_lut = true;
        act.census.mrs_input = 3 * K;  // scale, sigmoid product, output rings
        act.census.memristors = K;     // analog input staging
      }
      act.arrays_in_optical_path = 1;
      sched.stages.push_back(act);
    }
    add_fc(UnitTag::ff_fc2);
    for (const OpNode* n : ln.by_tag[int(UnitTag::ff_addnorm)]) {
      if (n->kind != OpKind::add) continue;  // one stage covers add + norm
      Stage an;
      an.tag = UnitTag::ff_addnorm;
      an.layer_index = layer;
      an.layer_slot = slot;
      an.mha_set = 2;
      an.parallel_group = tail_group;
      an.lane = 1;
      an.pass_count = (n->m * n->p + K - 1) / K;
      an.census.mrs_input = K;
      an.census.vcsels = 2 * K;
      an.census.pds_bpds = K;
      an.census.adcs = K;
      an.arrays_in_optical_path = 1;
      an.waveguide_groups = 2;
      sched.stages.push_back(an);
    }
  }
  return sched;
}

std::string dump_schedule(const MappedSchedule& schedule) {
  std::ostringstream os;
  os << "stage\tunit_tag\tpasses\tparallel_group\tlane\tlayer\tset\tunits\tmrs_w\tmrs_in\tvcsels"
     << "\tbpds\tdacs_in\tdacs_w\tadcs\tsoas\tmemristors\tresident\n";
  int i = 0;
  for (const auto& s : schedule.stages) {
    const auto& c = s.census;
    os << i++ << "\t" << to_string(s.tag) << "\t" << s.pass_count << "\t" << s.parallel_group
       << "\t" << s.lane << "\t" << s.layer_index << "\t" << s.mha_set << "\t"
       << s.concurrent_units << "\t" << c.mrs_weight << "\t" << c.mrs_input << "\t" << c.vcsels
       << "\t" << c.pds_bpds << "\t" << c.dacs_input << "\t" << c.dacs_weight << "\t" << c.adcs
       << "\t" << c.soas << "\t" << c.memristors << "\t" << (s.weights_resident ? 1 : 0) << "\n";
  }
  return os.str();
}

}  // namespace photrans
