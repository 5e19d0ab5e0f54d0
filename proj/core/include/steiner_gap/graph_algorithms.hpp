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


#ifndef STEINER_GAP_GRAPH_ALGORITHMS_HPP_
#define STEINER_GAP_GRAPH_ALGORITHMS_HPP_

#include <optional>
#include <string>
#include <vector>

#include "steiner_gap/graph.hpp"

namespace steiner_gap {

// Edge set of a tree spanning the required vertices.
struct TreeSolution {
  std::vector<EdgeId> edges;  // sorted
  Rational cost;
};

struct ShortestPaths {
  std::vector<std::optional<Rational>> dist;  // nullopt when unreachable
  std::vector<EdgeId> pred_edge;              // -1 at the source or when unreachable
};

// Dijkstra with exact costs; ties resolved towards smaller vertex ids.
ShortestPaths shortest_paths(const Graph& g, VertexId source);
// Edges of the shortest path from the source of `sp` to `target`.
std::vector<EdgeId> path_edges(const Graph& g, const ShortestPaths& sp, VertexId target);

Rational edge_set_cost(const Graph& g, const std::vector<EdgeId>& edges);

// Kruskal restricted to `candidates` and to edges with both endpoints in
// `keep` (all vertices when empty). Ties broken by edge id.
std::vector<EdgeId> minimum_spanning_forest(const Graph& g, const std::vector<EdgeId>& candidates,
                                            const std::vector<bool>& keep = {});

// Spanning forest of the given edges followed by repeated removal of
// non-required leaves. The cost never increases.
TreeSolution prune_to_steiner_tree(const SteinerInstance& inst, const std::vector<EdgeId>& edges);

// Empty string if `tree` is a tree containing every required vertex with
// the stated cost; otherwise the first defect. Non-required leaves are a
// defect unless allowed.
std::string check_steiner_tree(const SteinerInstance& inst, const TreeSolution& tree,
                               bool allow_steiner_leaves = false);

}  // namespace steiner_gap

#endif  // STEINER_GAP_GRAPH_ALGORITHMS_HPP_
