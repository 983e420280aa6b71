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
#ifndef NNBENCH_DELEGATION_PARTITION_HPP_
#define NNBENCH_DELEGATION_PARTITION_HPP_

#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "nnbench/delegation/graph.hpp"

namespace nnbench::delegation {

inline constexpr int kCpuAssignment = -1;

// Delegate/CPU split of an operator graph. assignment maps node id to
// kCpuAssignment or the index of a delegate subgraph.
struct PartitionPlan {
  std::map<std::string, int> assignment;
  std::vector<std::set<std::string>> subgraphs;
  int boundary_crossings = 0;
};

using SupportPredicate =
    std::function<bool(OpKind kind, core::Precision precision)>;

// Assigns every supported node to a delegate subgraph and every
// unsupported node to the CPU. Valid subgraphs are connected (undirected,
// via edges internal to the subgraph) and have no CPU node on a directed
// path between two of their members. Among valid plans the one with the
// fewest subgraphs is chosen; ties break to the lexicographically
// smallest assignment over sorted node ids.
PartitionPlan partition(const OpGraph& graph, const SupportPredicate& supported);

struct NodeCost {
  double delegate_ms = 0.0;
  double cpu_ms = 0.0;
};

// Sequential execution model: sum of per-node costs under their
// assignment plus boundary_crossings * crossing_overhead_ms.
double estimate_latency(const PartitionPlan& plan,
                        const std::map<std::string, NodeCost>& op_cost_ms,
                        double crossing_overhead_ms);

// Recomputes boundary crossings from graph edges and an assignment.
int count_boundary_crossings(const OpGraph& graph,
                             const std::map<std::string, int>& assignment);

// Checks the PartitionPlan invariants against a graph; returns the list
// of violations (empty iff valid). Used by tests and the plan command.
std::vector<std::string> validate_plan(const OpGraph& graph,
                                       const PartitionPlan& plan,
                                       const SupportPredicate& supported);

}  // namespace nnbench::delegation

#endif  // NNBENCH_DELEGATION_PARTITION_HPP_
