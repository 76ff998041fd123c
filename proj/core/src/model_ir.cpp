// SPDX-License-Identifier: Apache-2.0
#include "photrans/model_ir.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace photrans {

void ModelSpec::validate() const {
  if (num_layers < 1 || num_heads < 1 || d_model < 1 || d_ff < 1)
    throw std::invalid_argument("ModelSpec: dimensions must be >= 1");
  if (seq_len < 1) throw std::invalid_argument("ModelSpec: seq_len must be >= 1");
  const int dk = effective_d_k();
  if (dk < 1 || dk * num_heads != d_model)
    throw std::invalid_argument("ModelSpec: d_k * num_heads must equal d_model");
  if (bits != 4 && bits != 8 && bits != 16 && bits != 32)
    throw std::invalid_argument("ModelSpec: bits must be one of {4, 8, 16, 32}");
}

std::vector<ModelSpec> builtin_models() {
  ModelSpec transformer{"transformer-base", 2, 8, 512, 2048, 64, 128,
                        Topology::encoder_decoder, Activation::relu, false, 8};
  ModelSpec bert{"bert-base", 12, 12, 768, 3072, 64, 128,
                 Topology::encoder_only, Activation::gelu, false, 8};
  ModelSpec albert = bert;
  albert.name = "albert-base";
  albert.weight_sharing = true;
  ModelSpec vit = bert;
  vit.name = "vit-base";
  vit.seq_len = 197;  // 196 patches of a 224x224 image at 16x16, plus class token
  return {transformer, bert, albert, vit};
}

ModelSpec builtin_model(const std::string& name) {
  for (const auto& m : builtin_models())
    if (m.name == name) return m;
  std::string known;
  for (const auto& n : builtin_model_names()) known += (known.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown model '" + name + "' (builtins: " + known + ")");
}

std::vector<std::string> builtin_model_names() {
  std::vector<std::string> names;
  for (const auto& m : builtin_models()) names.push_back(m.name);
  return names;
}

const char* to_string(UnitTag tag) {
  switch (tag) {
    case UnitTag::attention_head_pre_softmax: return "attention_head_pre_softmax";
    case UnitTag::softmax: return "softmax";
    case UnitTag::attention_head_post_softmax: return "attention_head_post_softmax";
    case UnitTag::mha_linear: return "mha_linear";
    case UnitTag::mha_addnorm: return "mha_addnorm";
    case UnitTag::ff_fc1: return "ff_fc1";
    case UnitTag::ff_activation: return "ff_activation";
    case UnitTag::ff_fc2: return "ff_fc2";
    case UnitTag::ff_addnorm: return "ff_addnorm";
  }
  return "?";
}

const char* to_string(OpKind kind) {
  switch (kind) {
    case OpKind::matmul: return "matmul";
    case OpKind::softmax: return "softmax";
    case OpKind::relu: return "relu";
    case OpKind::gelu: return "gelu";
    case OpKind::add: return "add";
    case OpKind::layernorm: return "layernorm";
    case OpKind::concat: return "concat";
    case OpKind::scale_shift: return "scale_shift";
  }
  return "?";
}

bool OpGraph::acyclic() const {
  std::vector<int> indeg(nodes.size(), 0);
  for (auto [a, b] : edges) ++indeg[b];
  std::vector<int> ready;
  for (size_t i = 0; i < nodes.size(); ++i)
    if (indeg[i] == 0) ready.push_back(int(i));
  size_t seen = 0;
  std::multimap<int, int> out;
  for (auto [a, b] : edges) out.emplace(a, b);
  while (!ready.empty()) {
    int n = ready.back();
    ready.pop_back();
    ++seen;
    auto [lo, hi] = out.equal_range(n);
    for (auto it = lo; it != hi; ++it)
      if (--indeg[it->second] == 0) ready.push_back(it->second);
  }
  return seen == nodes.size();
}

std::vector<int> OpGraph::consumers(int node_id) const {
  std::vector<int> out;
  for (auto [a, b] : edges)
    if (a == node_id) out.push_back(b);
  return out;
}

namespace {

class Builder {
 public:
  explicit Builder(const ModelSpec& spec) : spec_(spec) {}

  OpGraph build() {
    const int layers = spec_.num_layers;
    if (spec_.topology == Topology::encoder_only) {
      int input = -1;
      for (int l = 0; l < layers; ++l) input = encoder_layer(l, input);
    } else {
      int enc = -1;
      for (int l = 0; l < layers; ++l) enc = encoder_layer(l, enc);
      int dec = -1;
      for (int l = 0; l < layers; ++l) dec = decoder_layer(layers + l, dec, enc);
    }
    return std::move(g_);
  }

 private:
  const ModelSpec& spec_;
  OpGraph g_;
  // (section, layer-relative slot) -> node id in the section's first layer
  // carrying that weight; section 0 = encoder stack, 1 = decoder stack.
  std::map<std::pair<int, int>, int> first_layer_weights_;
  int slot_counter_ = 0;

  int add(OpKind kind, std::int64_t m, std::int64_t p, std::int64_t c, UnitTag tag, int layer,
          int head, bool decoder, int mha_block, bool masked, bool carries_weights,
          std::vector<int> deps) {
    OpNode node;
    node.id = int(g_.nodes.size());
    node.kind = kind;
    node.m = m;
    node.p = p;
    node.c = c;
    node.tag = tag;
    node.layer_index = layer;
    node.head_index = head;
    node.decoder = decoder;
    node.mha_block = mha_block;
    node.masked = masked;
    if (carries_weights && spec_.weight_sharing) {
      const auto key = std::make_pair(decoder ? 1 : 0, slot_counter_);
      const auto it = first_layer_weights_.find(key);
      if (it == first_layer_weights_.end())
        first_layer_weights_[key] = node.id;
      else
        node.shares_weights_with = it->second;
    }
    if (carries_weights) ++slot_counter_;
    g_.nodes.push_back(node);
    for (int d : deps)
      if (d >= 0) g_.edges.emplace_back(d, node.id);
    return node.id;
  }

  // One MHA block. kv_input is the source of keys/values (differs from the
  // query input only in decoder cross-attention). Returns the post-norm id.
  int mha_block(int layer, int q_input, int kv_input, bool decoder, int block, bool masked) {
    const std::int64_t s = spec_.seq_len;
    const std::int64_t d = spec_.d_model;
    const std::int64_t dk = spec_.effective_d_k();
    const UnitTag pre = UnitTag::attention_head_pre_softmax;
    std::vector<int> head_outputs;
    for (int h = 0; h < spec_.num_heads; ++h) {
      // Reassociated score chain; 1/sqrt(d_k) lives inside the stored W_K^T.
      int q = add(OpKind::matmul, s, d, dk, pre, layer, h, decoder, block, masked, true, {q_input});
      int qk = add(OpKind::matmul, s, dk, d, pre, layer, h, decoder, block, masked, true, {q});
      int scores = add(OpKind::matmul, s, d, s, pre, layer, h, decoder, block, masked, false,
                       {qk, kv_input});
      int v = add(OpKind::matmul, s, d, dk, pre, layer, h, decoder, block, masked, true,
                  {kv_input});
      int sm = add(OpKind::softmax, s, s, 0, UnitTag::softmax, layer, h, decoder, block, masked,
                   false, {scores});
      int sv = add(OpKind::matmul, s, s, dk, UnitTag::attention_head_post_softmax, layer, h,
                   decoder, block, masked, false, {sm, v});
      head_outputs.push_back(sv);
    }
    int cat = add(OpKind::concat, s, d, 0, UnitTag::mha_linear, layer, -1, decoder, block, masked,
                  false, head_outputs);
    int lin = add(OpKind::matmul, s, d, d, UnitTag::mha_linear, layer, -1, decoder, block, masked,
                  true, {cat});
    int res = add(OpKind::add, s, d, 0, UnitTag::mha_addnorm, layer, -1, decoder, block, masked,
                  false, {lin, q_input});
    int ln = add(OpKind::layernorm, s, d, 0, UnitTag::mha_addnorm, layer, -1, decoder, block,
                 masked, true, {res});
    return ln;
  }

  int ff_block(int layer, int input, bool decoder) {
    const std::int64_t s = spec_.seq_len;
    const std::int64_t d = spec_.d_model;
    const std::int64_t dff = spec_.d_ff;
    int fc1 = add(OpKind::matmul, s, d, dff, UnitTag::ff_fc1, layer, -1, decoder, 0, false, true,
                  {input});
    const OpKind act = spec_.activation == Activation::relu ? OpKind::relu : OpKind::gelu;
    int a = add(act, s, dff, 0, UnitTag::ff_activation, layer, -1, decoder, 0, false, false, {fc1});
    int fc2 = add(OpKind::matmul, s, dff, d, UnitTag::ff_fc2, layer, -1, decoder, 0, false, true,
                  {a});
    int res = add(OpKind::add, s, d, 0, UnitTag::ff_addnorm, layer, -1, decoder, 0, false, false,
                  {fc2, input});
    int ln = add(OpKind::layernorm, s, d, 0, UnitTag::ff_addnorm, layer, -1, decoder, 0, false,
                 true, {res});
    return ln;
  }

  int encoder_layer(int layer, int input) {
    slot_counter_ = 0;
    int a = mha_block(layer, input, input, false, 0, false);
    return ff_block(layer, a, false);
  }

  int decoder_layer(int layer, int input, int encoder_out) {
    slot_counter_ = 0;
    int self = mha_block(layer, input, input, true, 0, true);
    int cross = mha_block(layer, self, encoder_out, true, 1, false);
    return ff_block(layer, cross, true);
  }
};

}  // namespace

OpGraph lower(const ModelSpec& spec) {
  spec.validate();
  return Builder(spec).build();
}

std::int64_t node_op_count(const OpNode& node) {
  switch (node.kind) {
    case OpKind::matmul: return 2 * node.m * node.p * node.c;
    case OpKind::softmax: return 5 * node.m * node.p;
    case OpKind::concat: return 0;
    case OpKind::relu:
    case OpKind::gelu:
    case OpKind::add:
    case OpKind::layernorm:
    case OpKind::scale_shift: return node.m * node.p;
  }
  return 0;
}

std::int64_t op_count(const OpGraph& graph) {
  std::int64_t total = 0;
  for (const auto& n : graph.nodes) total += node_op_count(n);
  return total;
}

std::string dump_edge_list(const OpGraph& graph) {
  std::ostringstream os;
  for (const auto& n : graph.nodes) {
    os << n.id << " " << to_string(n.kind) << " " << n.m << "x" << n.p;
    if (n.kind == OpKind::matmul) os << "x" << n.c;
    os << " " << to_string(n.tag) << " layer=" << n.layer_index;
    if (n.head_index >= 0) os << " head=" << n.head_index;
    if (n.decoder) os << " decoder block=" << n.mha_block;
    if (n.shares_weights_with >= 0) os << " shares=" << n.shares_weights_with;
    os << "\n";
  }
  for (auto [a, b] : graph.edges) os << a << " -> " << b << "\n";
  return os.str();
}

}  // namespace photrans
