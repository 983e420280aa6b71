/* Copyright 2026 The nnbench Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/
#ifndef NNBENCH_DELEGATION_GRAPH_HPP_
#define NNBENCH_DELEGATION_GRAPH_HPP_

#include <string>
#include <utility>
#include <vector>

#include "nnbench/core/types.hpp"

namespace nnbench::delegation {

// Operator vocabulary. Backend capability maps are total over this enum.
enum class OpKind {
  kConv2d,
  kDepthwiseConv2d,
  kDeconv2d,
  kFullyConnected,
  kPool,
  kActivation,
  kNormalization,
  kAdd,
  kMul,
  kConcat,
  kResize,
  kSoftmax,
  kLstm,
  kReshape,
};

inline constexpr OpKind kAllOpKinds[] = {
    OpKind::kConv2d,      OpKind::kDepthwiseConv2d,
    OpKind::kDeconv2d,    OpKind::kFullyConnected,
    OpKind::kPool,        OpKind::kActivation,
    OpKind::kNormalization, OpKind::kAdd,
    OpKind::kMul,         OpKind::kConcat,
    OpKind::kResize,      OpKind::kSoftmax,
    OpKind::kLstm,        OpKind::kReshape,
};

std::string to_string(OpKind k);
OpKind op_kind_from_string(const std::string& s);

struct OpNode {
  std::string id;
  OpKind kind = OpKind::kConv2d;
  core::Precision precision = core::Precision::kFp32;
};

// Operator DAG. Edges are (producer, consumer) node-id pairs.
struct OpGraph {
  std::vector<OpNode> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
};

// Parses the graph interchange text format:
//   node <id> <kind> <precision>
//   edge <producer-id> <consumer-id>
//   cost <id> <delegate_ms> <cpu_ms>        (optional, for estimation)
// '#' starts a comment; blank lines ignored.
struct GraphDocument {
  OpGraph graph;
  // Per-node (delegate_ms, cpu_ms); may be empty when no cost lines exist.
  std::vector<std::pair<std::string, std::pair<double, double>>> costs;
};

GraphDocument parse_graph(const std::string& text);
GraphDocument load_graph_file(const std::string& path);

}  // namespace nnbench::delegation

#endif  // NNBENCH_DELEGATION_GRAPH_HPP_
