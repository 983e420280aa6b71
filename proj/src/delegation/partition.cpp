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
#include "nnbench/delegation/partition.hpp"

#include <algorithm>
#include <queue>
#include <unordered_map>

#include "nnbench/error.hpp"

namespace nnbench::delegation {

namespace {

struct IndexedGraph {
  std::vector<OpNode> nodes;                 // original order
  std::unordered_map<std::string, int> index;
  std::vector<std::vector<int>> succ;
  std::vector<std::vector<int>> pred;
  std::vector<std::vector<int>> undirected;  // succ ∪ pred
  std::vector<int> topo;                     // topological order
};

IndexedGraph index_graph(const OpGraph& graph) {
  IndexedGraph g;
  g.nodes = graph.nodes;
  for (int i = 0; i < static_cast<int>(g.nodes.size()); ++i) {
    if (!g.index.emplace(g.nodes[i].id, i).second) {
      throw Error(ErrorCode::kInvalidArgument,
                  "duplicate node id: " + g.nodes[i].id);
    }
  }
  const int n = static_cast<int>(g.nodes.size());
  g.succ.resize(n);
  g.pred.resize(n);
  g.undirected.resize(n);
  for (const auto& [src, dst] : graph.edges) {
    auto si = g.index.find(src);
    auto di = g.index.find(dst);
    if (si == g.index.end() || di == g.index.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "edge references unknown node: " + src + " -> " + dst);
    }
    g.succ[si->second].push_back(di->second);
    g.pred[di->second].push_back(si->second);
    g.undirected[si->second].push_back(di->second);
    g.undirected[di->second].push_back(si->second);
  }
  // Kahn topological sort; leftover nodes mean a cycle.
  std::vector<int> indeg(n, 0);
  for (int u = 0; u < n; ++u) {
    for (int v : g.succ[u]) ++indeg[v];
  }
  std::queue<int> ready;
  for (int u = 0; u < n; ++u) {
    if (indeg[u] == 0) ready.push(u);
  }
  while (!ready.empty()) {
    int u = ready.front();
    ready.pop();
    g.topo.push_back(u);
    for (int v : g.succ[u]) {
      if (--indeg[v] == 0) ready.push(v);
    }
  }
  if (static_cast<int>(g.topo.size()) != n) {
    throw Error(ErrorCode::kCyclicGraph, "operator graph contains a cycle");
  }
  return g;
}

// conflict[u][v]: some directed path between u and v (either direction)
// passes through a CPU (unsupported) node. Such pairs can never share a
// delegate subgraph.
std::vector<std::vector<bool>> conflict_matrix(
    const IndexedGraph& g, const std::vector<bool>& is_supported) {
  const int n = static_cast<int>(g.nodes.size());
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
  std::vector<std::vector<bool>> reach_via_cpu(n,
                                               std::vector<bool>(n, false));
  for (auto it = g.topo.rbegin(); it != g.topo.rend(); ++it) {
    int u = *it;
    for (int v : g.succ[u]) {
      reach[u][v] = true;
      for (int w = 0; w < n; ++w) {
        if (reach[v][w]) reach[u][w] = true;
        if (is_supported[v] ? reach_via_cpu[v][w] : reach[v][w]) {
          reach_via_cpu[u][w] = true;
        }
      }
    }
  }
  std::vector<std::vector<bool>> conflict(n, std::vector<bool>(n, false));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (reach_via_cpu[u][v]) conflict[u][v] = conflict[v][u] = true;
    }
  }
  return conflict;
}

bool group_connected(const IndexedGraph& g, const std::vector<int>& members) {
  if (members.empty()) return false;
  std::vector<bool> in_group(g.nodes.size(), false);
  for (int m : members) in_group[m] = true;
  std::vector<int> stack{members[0]};
  std::vector<bool> seen(g.nodes.size(), false);
  seen[members[0]] = true;
  int visited = 0;
  while (!stack.empty()) {
    int u = stack.back();
    stack.pop_back();
    ++visited;
    for (int v : g.undirected[u]) {
      if (in_group[v] && !seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
    }
  }
  return visited == static_cast<int>(members.size());
}

int component_count(const IndexedGraph& g, const std::vector<int>& supported,
                    const std::vector<bool>& is_supported) {
  std::vector<bool> seen(g.nodes.size(), false);
  int components = 0;
  for (int s : supported) {
    if (seen[s]) continue;
    ++components;
    std::vector<int> stack{s};
    seen[s] = true;
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v : g.undirected[u]) {
        if (is_supported[v] && !seen[v]) {
          seen[v] = true;
          stack.push_back(v);
        }
      }
    }
  }
  return components;
}

// Exhaustive search: assign nodes (in sorted-id order) to group indices,
// trying lower indices first, under an iterative-deepening bound on the
// group count. The first complete assignment whose groups are all
// connected is both minimal and lexicographically smallest.
class ExactSearch {
 public:
  ExactSearch(const IndexedGraph& g, const std::vector<int>& order,
              const std::vector<std::vector<bool>>& conflict)
      : g_(g), order_(order), conflict_(conflict) {}

  bool run(int max_groups, std::vector<int>* out_groups) {
    max_groups_ = max_groups;
    groups_.assign(order_.size(), -1);
    members_.clear();
    if (!dfs(0)) return false;
    *out_groups = groups_;
    return true;
  }

 private:
  bool dfs(std::size_t pos) {
    if (pos == order_.size()) {
      for (const auto& m : members_) {
        if (!group_connected(g_, m)) return false;
      }
      return true;
    }
    int node = order_[pos];
    int used = static_cast<int>(members_.size());
    for (int gi = 0; gi < used; ++gi) {
      bool ok = true;
      for (int m : members_[gi]) {
        if (conflict_[node][m]) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      groups_[pos] = gi;
      members_[gi].push_back(node);
      if (dfs(pos + 1)) return true;
      members_[gi].pop_back();
    }
    if (used < max_groups_) {
      groups_[pos] = used;
      members_.push_back({node});
      if (dfs(pos + 1)) return true;
      members_.pop_back();
    }
    groups_[pos] = -1;
    return false;
  }

  const IndexedGraph& g_;
  const std::vector<int>& order_;
  const std::vector<std::vector<bool>>& conflict_;
  int max_groups_ = 0;
  std::vector<int> groups_;
  std::vector<std::vector<int>> members_;
};

// Fallback for large graphs where the exact search would blow up:
// topological sweep, attach each node to the first conflict-free group it
// has an internal edge into. Valid but not guaranteed minimal.
std::vector<int> greedy_groups(const IndexedGraph& g,
                               const std::vector<int>& order,
                               const std::vector<std::vector<bool>>& conflict) {
  std::unordered_map<int, std::size_t> pos_of;
  for (std::size_t i = 0; i < order.size(); ++i) pos_of[order[i]] = i;
  std::vector<int> groups(order.size(), -1);
  std::vector<std::vector<int>> members;
  for (int u : g.topo) {
    auto it = pos_of.find(u);
    if (it == pos_of.end()) continue;
    int chosen = -1;
    for (int gi = 0; gi < static_cast<int>(members.size()); ++gi) {
      bool adjacent = false;
      bool clash = false;
      for (int m : members[gi]) {
        if (conflict[u][m]) {
          clash = true;
          break;
        }
        if (std::find(g.undirected[u].begin(), g.undirected[u].end(), m) !=
            g.undirected[u].end()) {
          adjacent = true;
        }
      }
      if (!clash && adjacent) {
        chosen = gi;
        break;
      }
    }
    if (chosen < 0) {
      chosen = static_cast<int>(members.size());
      members.push_back({});
    }
    members[chosen].push_back(u);
    groups[it->second] = chosen;
  }
  return groups;
}

constexpr std::size_t kExactSearchNodeLimit = 20;

}  // namespace

int count_boundary_crossings(const OpGraph& graph,
                             const std::map<std::string, int>& assignment) {
  int crossings = 0;
  for (const auto& [src, dst] : graph.edges) {
    auto si = assignment.find(src);
    auto di = assignment.find(dst);
    if (si == assignment.end() || di == assignment.end()) {
      throw Error(ErrorCode::kMissingEntry,
                  "assignment missing for edge " + src + " -> " + dst);
    }
    if (si->second != di->second) ++crossings;
  }
  return crossings;
}

PartitionPlan partition(const OpGraph& graph,
                        const SupportPredicate& supported) {
  IndexedGraph g = index_graph(graph);
  const int n = static_cast<int>(g.nodes.size());

  std::vector<bool> is_supported(n, false);
  for (int i = 0; i < n; ++i) {
    is_supported[i] = supported(g.nodes[i].kind, g.nodes[i].precision);
  }
  std::vector<int> supported_nodes;
  for (int i = 0; i < n; ++i) {
    if (is_supported[i]) supported_nodes.push_back(i);
  }
  std::sort(supported_nodes.begin(), supported_nodes.end(),
            [&](int a, int b) { return g.nodes[a].id < g.nodes[b].id; });

  auto conflict = conflict_matrix(g, is_supported);

  std::vector<int> groups;  // per supported_nodes position
  if (!supported_nodes.empty()) {
    if (supported_nodes.size() <= kExactSearchNodeLimit) {
      ExactSearch search(g, supported_nodes, conflict);
      int lower = component_count(g, supported_nodes, is_supported);
      for (int max_groups = lower;
           max_groups <= static_cast<int>(supported_nodes.size());
           ++max_groups) {
        if (search.run(max_groups, &groups)) break;
      }
    } else {
      groups = greedy_groups(g, supported_nodes, conflict);
    }
  }

  PartitionPlan plan;
  int group_count = 0;
  for (int gi : groups) group_count = std::max(group_count, gi + 1);
  plan.subgraphs.resize(group_count);
  for (int i = 0; i < n; ++i) plan.assignment[g.nodes[i].id] = kCpuAssignment;
  for (std::size_t p = 0; p < supported_nodes.size(); ++p) {
    const std::string& id = g.nodes[supported_nodes[p]].id;
    plan.assignment[id] = groups[p];
    plan.subgraphs[groups[p]].insert(id);
  }
  plan.boundary_crossings = count_boundary_crossings(graph, plan.assignment);
  return plan;
}

double estimate_latency(const PartitionPlan& plan,
                        const std::map<std::string, NodeCost>& op_cost_ms,
                        double crossing_overhead_ms) {
  double total = 0.0;
  for (const auto& [id, group] : plan.assignment) {
    auto it = op_cost_ms.find(id);
    if (it == op_cost_ms.end()) {
      throw Error(ErrorCode::kMissingEntry, "missing cost entry for node " + id);
    }
    total += group == kCpuAssignment ? it->second.cpu_ms
                                     : it->second.delegate_ms;
  }
  total += plan.boundary_crossings * crossing_overhead_ms;
  return total;
}

std::vector<std::string> validate_plan(const OpGraph& graph,
                                       const PartitionPlan& plan,
                                       const SupportPredicate& supported) {
  std::vector<std::string> violations;
  IndexedGraph g = index_graph(graph);
  const int n = static_cast<int>(g.nodes.size());
  std::vector<bool> is_supported(n, false);
  for (int i = 0; i < n; ++i) {
    is_supported[i] = supported(g.nodes[i].kind, g.nodes[i].precision);
  }

  for (int i = 0; i < n; ++i) {
    auto it = plan.assignment.find(g.nodes[i].id);
    if (it == plan.assignment.end()) {
      violations.push_back("node not assigned: " + g.nodes[i].id);
      continue;
    }
    if (is_supported[i] && it->second == kCpuAssignment) {
      violations.push_back("supported node left on CPU: " + g.nodes[i].id);
    }
    if (!is_supported[i] && it->second != kCpuAssignment) {
      violations.push_back("unsupported node delegated: " + g.nodes[i].id);
    }
  }

  auto conflict = conflict_matrix(g, is_supported);
  for (std::size_t k = 0; k < plan.subgraphs.size(); ++k) {
    std::vector<int> members;
    for (const auto& id : plan.subgraphs[k]) {
      auto it = g.index.find(id);
      if (it == g.index.end()) {
        violations.push_back("subgraph member not in graph: " + id);
        continue;
      }
      members.push_back(it->second);
      auto a = plan.assignment.find(id);
      if (a == plan.assignment.end() || a->second != static_cast<int>(k)) {
        violations.push_back("assignment disagrees with subgraph " +
                             std::to_string(k) + " for node " + id);
      }
    }
    if (!group_connected(g, members)) {
      violations.push_back("subgraph " + std::to_string(k) +
                           " is not connected");
    }
    for (std::size_t a = 0; a < members.size(); ++a) {
      for (std::size_t b = a + 1; b < members.size(); ++b) {
        if (conflict[members[a]][members[b]]) {
          violations.push_back("CPU node on path inside subgraph " +
                               std::to_string(k));
          b = members.size();
          a = members.size();
        }
      }
    }
  }

  int expected = count_boundary_crossings(graph, plan.assignment);
  if (expected != plan.boundary_crossings) {
    violations.push_back("boundary_crossings mismatch: stored " +
                         std::to_string(plan.boundary_crossings) +
                         " actual " + std::to_string(expected));
  }
  return violations;
}

}  // namespace nnbench::delegation
