// Copyright 2026 The steiner_gap Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "steiner_gap/graph_algorithms.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

namespace steiner_gap {
namespace {

class DisjointSets {
 public:
  explicit DisjointSets(int n) : parent_(static_cast<size_t>(n)) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[static_cast<size_t>(x)] != x) {
      parent_[static_cast<size_t>(x)] = parent_[static_cast<size_t>(parent_[static_cast<size_t>(x)])];
      x = parent_[static_cast<size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<size_t>(std::max(a, b))] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

}  // namespace

ShortestPaths shortest_paths(const Graph& g, VertexId source) {
  g.check_vertex(source);
  const size_t n = static_cast<size_t>(g.num_vertices());
  ShortestPaths sp;
  sp.dist.assign(n, std::nullopt);
  sp.pred_edge.assign(n, -1);
  std::vector<bool> done(n, false);
  std::set<std::pair<Rational, VertexId>> frontier;
  sp.dist[static_cast<size_t>(source)] = Rational(0);
  frontier.insert({Rational(0), source});
  while (!frontier.empty()) {
    auto [d, v] = *frontier.begin();
    frontier.erase(frontier.begin());
    done[static_cast<size_t>(v)] = true;
    for (EdgeId e : g.incident(v)) {
      VertexId w = g.other(e, v);
      if (done[static_cast<size_t>(w)]) continue;
      Rational cand = d + g.cost(e);
      auto& slot = sp.dist[static_cast<size_t>(w)];
      if (slot && !(cand < *slot)) continue;
      if (slot) frontier.erase({*slot, w});
      slot = cand;
      sp.pred_edge[static_cast<size_t>(w)] = e;
      frontier.insert({cand, w});
    }
  }
  return sp;
}

std::vector<EdgeId> path_edges(const Graph& g, const ShortestPaths& sp, VertexId target) {
  if (!sp.dist.at(static_cast<size_t>(target))) throw GraphError("path_edges: target unreachable");
  std::vector<EdgeId> out;
  VertexId v = target;
  while (sp.pred_edge[static_cast<size_t>(v)] >= 0) {
    EdgeId e = sp.pred_edge[static_cast<size_t>(v)];
    out.push_back(e);
    v = g.other(e, v);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

Rational edge_set_cost(const Graph& g, const std::vector<EdgeId>& edges) {
  Rational total;
  for (EdgeId e : edges) total += g.cost(e);
  return total;
}

std::vector<EdgeId> minimum_spanning_forest(const Graph& g, const std::vector<EdgeId>& candidates,
                                            const std::vector<bool>& keep) {
  std::vector<EdgeId> order;
  for (EdgeId e : candidates) {
    const Edge& ed = g.edge(e);
    if (!keep.empty() && (!keep[static_cast<size_t>(ed.u)] || !keep[static_cast<size_t>(ed.v)])) continue;
    order.push_back(e);
  }
  std::sort(order.begin(), order.end(), [&](EdgeId a, EdgeId b) {
    if (g.cost(a) != g.cost(b)) return g.cost(a) < g.cost(b);
    return a < b;
  });
  DisjointSets sets(g.num_vertices());
  std::vector<EdgeId> out;
  for (EdgeId e : order) {
    if (sets.unite(g.edge(e).u, g.edge(e).v)) out.push_back(e);
  }
  std::sort(out.begin(), out.end());
  return out;
}

TreeSolution prune_to_steiner_tree(const SteinerInstance& inst, const std::vector<EdgeId>& edges) {
  const Graph& g = inst.graph;
  std::vector<EdgeId> forest = minimum_spanning_forest(g, edges);
  // Keep only the component of the first required vertex.
  std::vector<bool> in_forest(static_cast<size_t>(g.num_edges()), false);
  for (EdgeId e : forest) in_forest[static_cast<size_t>(e)] = true;
  auto reach = g.reachable(inst.required.front(), [&](EdgeId e) { return in_forest[static_cast<size_t>(e)]; });
  std::vector<int> degree(static_cast<size_t>(g.num_vertices()), 0);
  std::vector<EdgeId> kept;
  for (EdgeId e : forest) {
    if (!reach[static_cast<size_t>(g.edge(e).u)]) {
      in_forest[static_cast<size_t>(e)] = false;
      continue;
    }
    ++degree[static_cast<size_t>(g.edge(e).u)];
    ++degree[static_cast<size_t>(g.edge(e).v)];
  }
  std::vector<VertexId> leaves;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (degree[static_cast<size_t>(v)] == 1 && !inst.is_required(v)) leaves.push_back(v);
  }
  while (!leaves.empty()) {
    VertexId v = leaves.back();
    leaves.pop_back();
    for (EdgeId e : g.incident(v)) {
      if (!in_forest[static_cast<size_t>(e)]) continue;
      in_forest[static_cast<size_t>(e)] = false;
      --degree[static_cast<size_t>(v)];
      VertexId w = g.other(e, v);
      if (--degree[static_cast<size_t>(w)] == 1 && !inst.is_required(w)) leaves.push_back(w);
    }
  }
  TreeSolution tree;
  for (EdgeId e : forest) {
    if (in_forest[static_cast<size_t>(e)]) tree.edges.push_back(e);
  }
  tree.cost = edge_set_cost(g, tree.edges);
  return tree;
}

std::string check_steiner_tree(const SteinerInstance& inst, const TreeSolution& tree, bool allow_steiner_leaves) {
  const Graph& g = inst.graph;
  std::vector<bool> used(static_cast<size_t>(g.num_edges()), false);
  std::vector<int> degree(static_cast<size_t>(g.num_vertices()), 0);
  DisjointSets sets(g.num_vertices());
  for (EdgeId e : tree.edges) {
    if (e < 0 || e >= g.num_edges()) return "edge id out of range";
    if (used[static_cast<size_t>(e)]) return "repeated edge " + std::to_string(e);
    used[static_cast<size_t>(e)] = true;
    if (!sets.unite(g.edge(e).u, g.edge(e).v)) return "cycle through edge " + std::to_string(e);
    ++degree[static_cast<size_t>(g.edge(e).u)];
    ++degree[static_cast<size_t>(g.edge(e).v)];
  }
  int root = sets.find(inst.required.front());
  for (VertexId r : inst.required) {
    if (sets.find(r) != root) return "required vertex " + std::to_string(r) + " not connected";
  }
  for (EdgeId e : tree.edges) {
    if (sets.find(g.edge(e).u) != root) return "edge " + std::to_string(e) + " outside the required component";
  }
  if (!allow_steiner_leaves) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (degree[static_cast<size_t>(v)] == 1 && !inst.is_required(v)) return "non-required leaf " + std::to_string(v);
    }
  }
  if (edge_set_cost(g, tree.edges) != tree.cost) return "stated cost differs from edge cost sum";
  return "";
}

}  // namespace steiner_gap
