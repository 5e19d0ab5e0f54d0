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

#ifndef STEINER_GAP_GRAPH_HPP_
#define STEINER_GAP_GRAPH_HPP_

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "steiner_gap/rational.hpp"
#include "steiner_gap/simplex_geometry.hpp"

namespace steiner_gap {

using VertexId = int;
using EdgeId = int;
// Arc 2e runs from edges[e].u to edges[e].v, arc 2e+1 the other way.
using ArcId = int;

struct Edge {
  VertexId u;
  VertexId v;
};

struct DirectedEdge {
  VertexId tail;
  VertexId head;
  friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

struct GoemansRole {
  char kind;  // 'r', 's', 'a', 'b' or 'c'
  int i = 0;  // 1-based index; unused for the root
  int j = 0;  // second index for 'b' and 'c' (i < j)
  friend bool operator==(const GoemansRole&, const GoemansRole&) = default;
};

struct SetCoverTuple {
  // Layer in the layered graph. -1 marks the pendant root of the extended
  // variant.
  int level = 0;
  std::vector<int> word;  // element indices chosen on the way down
  // Set index on layers 1..p, element index on layer p+1, -1 at the root.
  int item = -1;
  friend bool operator==(const SetCoverTuple&, const SetCoverTuple&) = default;
};

struct OpaqueLabel {
  std::string name;
  friend bool operator==(const OpaqueLabel&, const OpaqueLabel&) = default;
};

using VertexLabel =
    std::variant<std::monostate, SimplexPoint, GoemansRole, SetCoverTuple, OpaqueLabel>;

std::string label_to_string(const VertexLabel& label);

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Undirected graph with dense vertex ids and nonnegative rational edge costs.
// Adding an edge that already exists keeps the smaller cost.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int num_vertices);

  VertexId add_vertex(VertexLabel label = {});
  EdgeId add_edge(VertexId a, VertexId b, const Rational& cost);

  int num_vertices() const { return static_cast<int>(labels_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_arcs() const { return 2 * num_edges(); }

  const Edge& edge(EdgeId e) const { return edges_[static_cast<size_t>(e)]; }
  const std::vector<Edge>& edges() const { return edges_; }
  const Rational& cost(EdgeId e) const { return costs_[static_cast<size_t>(e)]; }
  const std::vector<Rational>& costs() const { return costs_; }
  void set_cost(EdgeId e, const Rational& cost);

  const VertexLabel& label(VertexId v) const { return labels_[static_cast<size_t>(v)]; }
  void set_label(VertexId v, VertexLabel label);
  // Vertex carrying the given label, if any.
  std::optional<VertexId> find_vertex(const VertexLabel& label) const;

  std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
  const std::vector<EdgeId>& incident(VertexId v) const {
    return incident_[static_cast<size_t>(v)];
  }
  VertexId other(EdgeId e, VertexId v) const;

  DirectedEdge arc(ArcId a) const;
  static EdgeId arc_edge(ArcId a) { return a / 2; }
  static ArcId reverse(ArcId a) { return a ^ 1; }
  ArcId arc_between(VertexId tail, VertexId head) const;
  // Arcs leaving / entering v.
  std::vector<ArcId> out_arcs(VertexId v) const;
  std::vector<ArcId> in_arcs(VertexId v) const;

  bool is_connected() const;
  // Vertices reachable from `start` using edges accepted by `keep`.
  template <class EdgePredicate>
  std::vector<bool> reachable(VertexId start, EdgePredicate keep) const;

  void check_vertex(VertexId v) const;
  void check_label_uniformity() const;

 private:
  std::vector<VertexLabel> labels_;
  std::vector<Edge> edges_;
  std::vector<Rational> costs_;
  std::vector<std::vector<EdgeId>> incident_;
  std::map<std::pair<VertexId, VertexId>, EdgeId> edge_index_;
};

// Both orientations of every edge, in arc-id order.
std::vector<DirectedEdge> bidirect(const Graph& g);

class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SteinerInstance {
  Graph graph;
  std::vector<VertexId> required;  // sorted, distinct
  std::string name;

  int num_vertices() const { return graph.num_vertices(); }
  int num_edges() const { return graph.num_edges(); }
  bool is_required(VertexId v) const;
  std::vector<bool> required_mask() const;
  VertexId default_root() const { return required.front(); }
  // Throws InstanceError unless the instance is well formed and connected.
  void validate() const;
};

SteinerInstance make_instance(Graph graph, std::vector<VertexId> required, std::string name);

template <class EdgePredicate>
std::vector<bool> Graph::reachable(VertexId start, EdgePredicate keep) const {
  std::vector<bool> seen(static_cast<size_t>(num_vertices()), false);
  std::vector<VertexId> stack{start};
  seen[static_cast<size_t>(start)] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : incident(v)) {
      if (!keep(e)) continue;
      VertexId w = other(e, v);
      if (!seen[static_cast<size_t>(w)]) {
        seen[static_cast<size_t>(w)] = true;
        stack.push_back(w);
      }
    }
  }
  return seen;
}

}  // namespace steiner_gap

#endif  // STEINER_GAP_GRAPH_HPP_
