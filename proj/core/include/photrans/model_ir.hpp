// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace photrans {

enum class Topology { encoder_decoder, encoder_only };
enum class Activation { relu, gelu };

// Transformer workload description.
struct ModelSpec {
  std::string name;
  int num_layers = 0;   // encoder depth; also decoder depth for encoder_decoder
  int num_heads = 0;
  int d_model = 0;
  int d_ff = 0;
  int d_k = 0;          // <= 0 means d_model / num_heads
  int seq_len = 0;      // <= 0 means the per-model default
  Topology topology = Topology::encoder_only;
  Activation activation = Activation::gelu;
  bool weight_sharing = false;
  int bits = 8;

  void validate() const;  // throws std::invalid_argument
  int effective_d_k() const { return d_k > 0 ? d_k : d_model / num_heads; }
};

// The four built-in workloads with their default sequence lengths
// (128 for the NLP models, 197 for the vision model).
std::vector<ModelSpec> builtin_models();
ModelSpec builtin_model(const std::string& name);  // throws on unknown name
std::vector<std::string> builtin_model_names();

enum class OpKind { matmul, softmax, relu, gelu, add, layernorm, concat, scale_shift };

enum class UnitTag {
  attention_head_pre_softmax,
  softmax,
  attention_head_post_softmax,
  mha_linear,
  mha_addnorm,
  ff_fc1,
  ff_activation,
  ff_fc2,
  ff_addnorm,
};

const char* to_string(UnitTag tag);
const char* to_string(OpKind kind);

struct OpNode {
  int id = -1;
  OpKind kind = OpKind::matmul;
  // matmul: {M, P, C} for (MxP)*(PxC); element-wise ops: {rows, cols, 0}.
  std::int64_t m = 0, p = 0, c = 0;
  UnitTag tag = UnitTag::attention_head_pre_softmax;
  int layer_index = 0;
  int head_index = -1;            // -1 for per-layer ops
  int shares_weights_with = -1;   // node id in the first layer, or -1
  bool decoder = false;
  int mha_block = 0;              // decoder layers: 0 = masked self, 1 = cross
  bool masked = false;            // no-cost annotation
};

struct OpGraph {
  std::vector<OpNode> nodes;
  std::vector<std::pair<int, int>> edges;  // producer -> consumer

  bool acyclic() const;
  std::vector<int> consumers(int node_id) const;
};

// Lower a workload into the device-agnostic operation graph.
//
// Per layer and per head the score chain is emitted in its reassociated
// form:  X*W_Q  ->  (.)*(W_K^T / sqrt(d_k))  ->  (.)*X^T, with the 1/sqrt(d_k)
// scaling folded into the stored key weights (no separate scale node).  The
// value projection X*W_V is emitted beside the chain (it shares the X imprint
// and is available before softmax); score*V is the single matmul downstream
// of softmax. weight_sharing adds shares_weights_with links to layer 0 and
// nothing else. Node ids are stable across runs.
OpGraph lower(const ModelSpec& spec);

// Total arithmetic operations: matmul 2*M*P*C, softmax 5 per element,
// add/normalization/activation 1 per element, concat 0.
std::int64_t op_count(const OpGraph& graph);
std::int64_t node_op_count(const OpNode& node);

// Debug dump: one "producer -> consumer" line per edge plus a node table.
std::string dump_edge_list(const OpGraph& graph);

}  // namespace photrans
