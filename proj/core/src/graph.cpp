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

#include "steiner_gap/graph.hpp"

#include <algorithm>

namespace steiner_gap {

std::string label_to_string(const VertexLabel& label) {
  struct Visitor {
    std::string operator()(std::monostate) const { return ""; }
    std::string operator()(const SimplexPoint& p) const { return p.to_string(); }
    std::string operator()(const GoemansRole& g) const {
      std::string out(1, g.kind);
      if (g.kind == 'r') return out;
      out += std::to_string(g.i);
      if (g.kind == 'b' || g.kind == 'c') out += "_" + std::to_string(g.j);
      return out;
    }
    std::string operator()(const SetCoverTuple& t) const {
      if (t.level < 0) return "r'";
      std::string out = "L" + std::to_string(t.level) + "[";
      for (size_t i = 0; i < t.word.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(t.word[i]);
      }
      out += "]";
      if (t.item >= 0) out += ":" + std::to_string(t.item);
      return out;
    }
    std::string operator()(const OpaqueLabel& o) const { return o.name; }
  };
  return std::visit(Visitor{}, label);
}

Graph::Graph(int num_vertices) {
  if (num_vertices < 0) throw GraphError("negative vertex count");
  labels_.resize(static_cast<size_t>(num_vertices));
  incident_.resize(static_cast<size_t>(num_vertices));
}

VertexId Graph::add_vertex(VertexLabel label) {
  labels_.push_back(std::move(label));
  incident_.emplace_back();
  return num_vertices() - 1;
}

void Graph::check_vertex(VertexId v) const {
  if (v < 0 || v >= num_vertices()) {
    throw GraphError("vertex id " + std::to_string(v) + " out of range");
  }
}

EdgeId Graph::add_edge(VertexId a, VertexId b, const Rational& cost) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw GraphError("self-loop at vertex " + std::to_string(a));
  if (cost.sign() < 0) throw GraphError("negative edge cost");
  auto key = std::minmax(a, b);
  auto it = edge_index_.find(key);
  if (it != edge_index_.end()) {
    Rational& existing = costs_[static_cast<size_t>(it->second)];
    if (cost < existing) existing = cost;
    return it->second;
  }
  EdgeId id = num_edges();
  edges_.push_back(Edge{key.first, key.second});
  costs_.push_back(cost);
  incident_[static_cast<size_t>(a)].push_back(id);
  incident_[static_cast<size_t>(b)].push_back(id);
  edge_index_.emplace(key, id);
  return id;
}

void Graph::set_cost(EdgeId e, const Rational& cost) {
  if (cost.sign() < 0) throw GraphError("negative edge cost");
  costs_.at(static_cast<size_t>(e)) = cost;
}

void Graph::set_label(VertexId v, VertexLabel label) {
  check_vertex(v);
  labels_[static_cast<size_t>(v)] = std::move(label);
}

std::optional<VertexId> Graph::find_vertex(const VertexLabel& label) const {
  for (VertexId v = 0; v < num_vertices(); ++v) {
    if (labels_[static_cast<size_t>(v)] == label) return v;
  }
  return std::nullopt;
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
  auto it = edge_index_.find(std::minmax(a, b));
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

VertexId Graph::other(EdgeId e, VertexId v) const {
  const Edge& ed = edge(e);
  return ed.u == v ? ed.v : ed.u;
}

DirectedEdge Graph::arc(ArcId a) const {
  const Edge& e = edge(a / 2);
  return (a % 2 == 0) ? DirectedEdge{e.u, e.v} : DirectedEdge{e.v, e.u};
}

ArcId Graph::arc_between(VertexId tail, VertexId head) const {
  auto e = find_edge(tail, head);
  if (!e) throw GraphError("no edge between the given vertices");
  return edge(*e).u == tail ? 2 * *e : 2 * *e + 1;
}

std::vector<ArcId> Graph::out_arcs(VertexId v) const {
  std::vector<ArcId> out;
  for (EdgeId e : incident(v)) out.push_back(edge(e).u == v ? 2 * e : 2 * e + 1);
  return out;
}

std::vector<ArcId> Graph::in_arcs(VertexId v) const {
  std::vector<ArcId> out;
  for (EdgeId e : incident(v)) out.push_back(edge(e).u == v ? 2 * e + 1 : 2 * e);
  return out;
}

bool Graph::is_connected() const {
  if (num_vertices() == 0) return true;
  auto seen = reachable(0, [](EdgeId) { return true; });
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

void Graph::check_label_uniformity() const {
  size_t kind = std::variant_npos;
  for (const auto& l : labels_) {
    if (std::holds_alternative<std::monostate>(l)) continue;
    if (kind == std::variant_npos) {
      kind = l.index();
    } else if (kind != l.index()) {
      throw GraphError("vertex labels of mixed kinds");
    }
  }
}

std::vector<DirectedEdge> bidirect(const Graph& g) {
  std::vector<DirectedEdge> out;
  out.reserve(static_cast<size_t>(g.num_arcs()));
  for (ArcId a = 0; a < g.num_arcs(); ++a) out.push_back(g.arc(a));
  return out;
}

bool SteinerInstance::is_required(VertexId v) const {
  return std::binary_search(required.begin(), required.end(), v);
}

std::vector<bool> SteinerInstance::required_mask() const {
  std::vector<bool> mask(static_cast<size_t>(num_vertices()), false);
  for (VertexId r : required) mask[static_cast<size_t>(r)] = true;
  return mask;
}

void SteinerInstance::validate() const {
  if (required.empty()) throw InstanceError(name + ": no required vertices");
  for (size_t i = 0; i < required.size(); ++i) {
    graph.check_vertex(required[i]);
    if (i > 0 && required[i - 1] >= required[i]) {
      throw InstanceError(name + ": required set not sorted and distinct");
    }
  }
  for (const Rational& c : graph.costs()) {
    if (c.sign() < 0) throw InstanceError(name + ": negative edge cost");
  }
  if (!graph.is_connected()) throw InstanceError(name + ": graph is not connected");
  graph.check_label_uniformity();
}

SteinerInstance make_instance(Graph graph, std::vector<VertexId> required, std::string name) {
  std::sort(required.begin(), required.end());
  required.erase(std::unique(required.begin(), required.end()), required.end());
  SteinerInstance inst{std::move(graph), std::move(required), std::move(name)};
  inst.validate();
  return inst;
}

}  // namespace steiner_gap
