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
#include "nnbench/delegation/graph.hpp"

#include <fstream>
#include <sstream>

#include "nnbench/error.hpp"

namespace nnbench::delegation {

std::string to_string(OpKind k) {
  switch (k) {
    case OpKind::kConv2d: return "conv2d";
    case OpKind::kDepthwiseConv2d: return "depthwise_conv2d";
    case OpKind::kDeconv2d: return "deconv2d";
    case OpKind::kFullyConnected: return "fully_connected";
    case OpKind::kPool: return "pool";
    case OpKind::kActivation: return "activation";
    case OpKind::kNormalization: return "normalization";
    case OpKind::kAdd: return "add";
    case OpKind::kMul: return "mul";
    case OpKind::kConcat: return "concat";
    case OpKind::kResize: return "resize";
    case OpKind::kSoftmax: return "softmax";
    case OpKind::kLstm: return "lstm";
    case OpKind::kReshape: return "reshape";
  }
  throw Error(ErrorCode::kInvalidArgument, "unknown op kind");
}

OpKind op_kind_from_string(const std::string& s) {
  for (OpKind k : kAllOpKinds) {
    if (to_string(k) == s) return k;
  }
  throw Error(ErrorCode::kParseError, "unknown op kind: " + s);
}

GraphDocument parse_graph(const std::string& text) {
  GraphDocument doc;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    auto fail = [&](const std::string& what) -> Error {
      return Error(ErrorCode::kParseError,
                   "graph line " + std::to_string(line_no) + ": " + what);
    };
    if (tag == "node") {
      std::string id, kind, precision;
      if (!(ls >> id >> kind >> precision)) {
        throw fail("expected: node <id> <kind> <precision>");
      }
      doc.graph.nodes.push_back(OpNode{id, op_kind_from_string(kind),
                                       core::precision_from_string(precision)});
    } else if (tag == "edge") {
      std::string src, dst;
      if (!(ls >> src >> dst)) throw fail("expected: edge <src> <dst>");
      doc.graph.edges.emplace_back(src, dst);
    } else if (tag == "cost") {
      std::string id;
      double delegate_ms = 0, cpu_ms = 0;
      if (!(ls >> id >> delegate_ms >> cpu_ms)) {
        throw fail("expected: cost <id> <delegate_ms> <cpu_ms>");
      }
      doc.costs.emplace_back(id, std::make_pair(delegate_ms, cpu_ms));
    } else {
      throw fail("unknown directive '" + tag + "'");
    }
  }
  return doc;
}

GraphDocument load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kIoError, "cannot open graph file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace nnbench::delegation
