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

#include "steiner_gap/instances.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

namespace steiner_gap {
namespace {

using PointIndex = std::map<SimplexPoint, VertexId>;

std::string params_name(const std::string& family, std::initializer_list<int> params) {
  std::string out = family;
  for (int p : params) out += "_" + std::to_string(p);
  return out;
}

void check_simplified_params(int d, int s, int delta) {
  if (d < 1) throw InstanceError("simplified instance: d >= 1 required");
  if (delta < 1) throw InstanceError("simplified instance: delta >= 1 required");
  if (2 * delta > s) throw InstanceError("simplified instance: 2 * delta <= s required");
}

struct EdgeSpec {
  VertexId a;
  VertexId b;
  Rational cost;
};

// Inserts edges sorted by endpoint pair so edge ids are canonical.
void add_sorted_edges(Graph& g, std::vector<EdgeSpec> specs) {
  for (auto& e : specs) {
    if (e.a > e.b) std::swap(e.a, e.b);
  }
  std::sort(specs.begin(), specs.end(), [](const EdgeSpec& x, const EdgeSpec& y) {
    return std::tie(x.a, x.b) < std::tie(y.a, y.b);
  });
  for (const auto& e : specs) g.add_edge(e.a, e.b, e.cost);
}

// Adds the two layers of the simplex graph restricted to coordinates at most
// `radius` and returns the point index.
PointIndex add_two_layers(Graph& g, int d, int s, int radius) {
  PointIndex index;
  for (int size : {s, s + 1}) {
    for (auto& p : enumerate_simplex(d, size)) {
      if (p.max_coord() > radius) continue;
      VertexId v = g.add_vertex(p);
      index.emplace(std::move(p), v);
    }
  }
  return index;
}

// Unit edges between layer-s points and the layer-(s+1) points one step up.
std::vector<EdgeSpec> unit_layer_edges(const PointIndex& index, int d, int s) {
  std::vector<EdgeSpec> specs;
  for (const auto& [p, v] : index) {
    if (p.size() != s) continue;
    for (int i = 0; i <= d; ++i) {
      SimplexPoint up = p;
      ++up.coords[static_cast<size_t>(i)];
      auto it = index.find(up);
      if (it != index.end()) specs.push_back({v, it->second, Rational(1)});
    }
  }
  return specs;
}

}  // namespace

SteinerInstance gen_simplex_instance(int d, int s) {
  if (d < 1 || s < 1) throw InstanceError("simplex instance: d, s >= 1 required");
  Graph g;
  PointIndex index = add_two_layers(g, d, s, s);
  add_sorted_edges(g, unit_layer_edges(index, d, s));
  std::vector<VertexId> required;
  for (int i = 0; i <= d; ++i) required.push_back(index.at(corner(d, s, i)));
  return make_instance(std::move(g), std::move(required), params_name("simplex", {d, s}));
}

SteinerInstance gen_simplified_simplex_instance(int d, int s, int delta) {
  check_simplified_params(d, s, delta);
  Graph g;
  PointIndex index = add_two_layers(g, d, s, s - delta);
  std::vector<EdgeSpec> specs = unit_layer_edges(index, d, s);
  std::vector<VertexId> required;
  for (int i = 0; i <= d; ++i) {
    VertexId r = g.add_vertex(corner(d, s, i));
    required.push_back(r);
    for (const auto& [p, v] : index) {
      if (p.size() == s && p[i] == s - delta) specs.push_back({r, v, Rational(2 * delta)});
    }
  }
  add_sorted_edges(g, std::move(specs));
  return make_instance(std::move(g), std::move(required),
                       params_name("simplified", {d, s, delta}));
}

SplitGraph gen_split_simplified_graph(int d, int s, int delta) {
  check_simplified_params(d, s, delta);
  SplitGraph out;
  out.d = d;
  out.s = s;
  out.delta = delta;
  Graph& g = out.graph;
  PointIndex index = add_two_layers(g, d, s, s - delta);
  std::vector<EdgeSpec> specs = unit_layer_edges(index, d, s);
  out.aux_sets.resize(static_cast<size_t>(d) + 1);
  out.aux_owner.assign(static_cast<size_t>(g.num_vertices()), -1);
  for (int i = 0; i <= d; ++i) {
    for (const auto& p : enumerate_simplex(d, s + 1)) {
      if (p[i] != s - delta + 1) continue;
      VertexId v = g.add_vertex(p);
      out.aux_sets[static_cast<size_t>(i)].push_back(v);
      out.aux_owner.push_back(i);
      SimplexPoint down = p;
      --down.coords[static_cast<size_t>(i)];
      specs.push_back({v, index.at(down), Rational(2 * delta)});
    }
  }
  add_sorted_edges(g, std::move(specs));
  return out;
}

SteinerInstance contract_split_graph(const SplitGraph& split) {
  const Graph& src = split.graph;
  Graph g;
  std::vector<VertexId> image(static_cast<size_t>(src.num_vertices()), -1);
  for (VertexId v = 0; v < src.num_vertices(); ++v) {
    if (split.aux_owner[static_cast<size_t>(v)] < 0) image[static_cast<size_t>(v)] = g.add_vertex(src.label(v));
  }
  std::vector<VertexId> required;
  for (int i = 0; i <= split.d; ++i) {
    VertexId r = g.add_vertex(corner(split.d, split.s, i));
    required.push_back(r);
    for (VertexId v : split.aux_sets[static_cast<size_t>(i)]) image[static_cast<size_t>(v)] = r;
  }
  std::vector<EdgeSpec> specs;
  for (EdgeId e = 0; e < src.num_edges(); ++e) {
    VertexId a = image[static_cast<size_t>(src.edge(e).u)];
    VertexId b = image[static_cast<size_t>(src.edge(e).v)];
    if (a != b) specs.push_back({a, b, src.cost(e)});
  }
  add_sorted_edges(g, std::move(specs));
  return make_instance(std::move(g), std::move(required),
                       params_name("simplified", {split.d, split.s, split.delta}));
}

SteinerInstance gen_goemans_instance(int d) {
  if (d < 1) throw InstanceError("goemans instance: d >= 1 required");
  Graph g;
  VertexId r = g.add_vertex(GoemansRole{'r'});
  std::vector<VertexId> s_id(static_cast<size_t>(d) + 1), a_id(static_cast<size_t>(d) + 1);
  for (int i = 1; i <= d; ++i) s_id[static_cast<size_t>(i)] = g.add_vertex(GoemansRole{'s', i});
  for (int i = 1; i <= d; ++i) a_id[static_cast<size_t>(i)] = g.add_vertex(GoemansRole{'a', i});
  std::map<std::pair<int, int>, VertexId> b_id, c_id;
  for (int i = 1; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) b_id[{i, j}] = g.add_vertex(GoemansRole{'b', i, j});
  }
  for (int i = 1; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) c_id[{i, j}] = g.add_vertex(GoemansRole{'c', i, j});
  }
  std::vector<EdgeSpec> specs;
  for (int i = 1; i <= d; ++i) {
    specs.push_back({r, a_id[static_cast<size_t>(i)], Rational(2)});
    specs.push_back({a_id[static_cast<size_t>(i)], s_id[static_cast<size_t>(i)], Rational(2)});
  }
  for (int i = 1; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      VertexId b = b_id[{i, j}];
      VertexId c = c_id[{i, j}];
      specs.push_back({b, s_id[static_cast<size_t>(i)], Rational(2)});
      specs.push_back({b, s_id[static_cast<size_t>(j)], Rational(2)});
      specs.push_back({c, a_id[static_cast<size_t>(i)], Rational(1)});
      specs.push_back({c, a_id[static_cast<size_t>(j)], Rational(1)});
      specs.push_back({c, b, Rational(1)});
    }
  }
  add_sorted_edges(g, std::move(specs));
  std::vector<VertexId> required{r};
  for (int i = 1; i <= d; ++i) required.push_back(s_id[static_cast<size_t>(i)]);
  return make_instance(std::move(g), std::move(required), params_name("goemans", {d}));
}

MinorMap goemans_minor_map(const SteinerInstance& goemans, const SteinerInstance& simplex) {
  const Graph& gi = goemans.graph;
  const Graph& si = simplex.graph;
  int d = static_cast<int>(goemans.required.size()) - 1;
  auto unit = [d](std::initializer_list<std::pair<int, int>> entries) {
    SimplexPoint p{std::vector<int>(static_cast<size_t>(d) + 1, 0)};
    for (auto [i, v] : entries) p.coords[static_cast<size_t>(i)] += v;
    return p;
  };
  auto point_of = [&](VertexId v) {
    const auto& role = std::get<GoemansRole>(gi.label(v));
    switch (role.kind) {
      case 'r': return unit({{0, 2}});
      case 's': return unit({{role.i, 2}});
      case 'a': return unit({{0, 1}, {role.i, 1}});
      case 'b': return unit({{role.i, 1}, {role.j, 1}});
      default: return unit({{0, 1}, {role.i, 1}, {role.j, 1}});
    }
  };
  auto vertex_of = [&](const SimplexPoint& p) {
    auto v = si.find_vertex(p);
    if (!v) throw InstanceError("goemans minor map: point missing from simplex graph");
    return *v;
  };
  MinorMap map;
  for (VertexId v = 0; v < gi.num_vertices(); ++v) map.vertex_image.push_back(vertex_of(point_of(v)));
  for (EdgeId e = 0; e < gi.num_edges(); ++e) {
    SimplexPoint a = point_of(gi.edge(e).u);
    SimplexPoint b = point_of(gi.edge(e).v);
    std::vector<VertexId> path{vertex_of(a)};
    if (gi.cost(e) == Rational(2)) {
      // Route through the size-3 point that lies one step above both ends.
      SimplexPoint mid = a;
      for (size_t k = 0; k < mid.coords.size(); ++k) mid.coords[k] = std::max(a.coords[k], b.coords[k]);
      path.push_back(vertex_of(mid));
    }
    path.push_back(vertex_of(b));
    map.edge_paths.push_back(std::move(path));
  }
  return map;
}

std::string check_minor_map(const SteinerInstance& small, const SteinerInstance& large,
                            const MinorMap& map) {
  const Graph& gs = small.graph;
  const Graph& gl = large.graph;
  if (static_cast<int>(map.vertex_image.size()) != gs.num_vertices() ||
      static_cast<int>(map.edge_paths.size()) != gs.num_edges()) {
    return "map size mismatch";
  }
  std::set<VertexId> images(map.vertex_image.begin(), map.vertex_image.end());
  if (static_cast<int>(images.size()) != gs.num_vertices()) return "vertex images not distinct";
  std::set<VertexId> interior_used;
  for (EdgeId e = 0; e < gs.num_edges(); ++e) {
    const auto& path = map.edge_paths[static_cast<size_t>(e)];
    if (path.size() < 2) return "edge path too short";
    VertexId a = map.vertex_image[static_cast<size_t>(gs.edge(e).u)];
    VertexId b = map.vertex_image[static_cast<size_t>(gs.edge(e).v)];
    if (!((path.front() == a && path.back() == b) || (path.front() == b && path.back() == a))) {
      return "edge path endpoints do not match vertex images";
    }
    Rational cost;
    for (size_t k = 0; k + 1 < path.size(); ++k) {
      auto le = gl.find_edge(path[k], path[k + 1]);
      if (!le) return "edge path uses a missing edge";
      cost += gl.cost(*le);
    }
    if (cost != gs.cost(e)) return "edge path cost differs from edge cost";
    for (size_t k = 1; k + 1 < path.size(); ++k) {
      if (images.count(path[k])) return "edge path passes through a vertex image";
      if (!interior_used.insert(path[k]).second) return "edge paths share an interior vertex";
    }
  }
  for (VertexId v = 0; v < gs.num_vertices(); ++v) {
    if (small.is_required(v) != large.is_required(map.vertex_image[static_cast<size_t>(v)])) {
      return "required status not preserved";
    }
  }
  return "";
}

int edge_level(const Graph& g, EdgeId e) {
  const auto& a = std::get<SimplexPoint>(g.label(g.edge(e).u));
  const auto& b = std::get<SimplexPoint>(g.label(g.edge(e).v));
  return std::max(level(a), level(b));
}

SteinerInstance gen_level_restricted(int d, int s, int lmax) {
  if (lmax < 1) throw InstanceError("level restriction: lmax >= 1 required");
  SteinerInstance full = gen_simplex_instance(d, s);
  const Graph& src = full.graph;
  std::vector<bool> keep_edge(static_cast<size_t>(src.num_edges()));
  std::vector<bool> touched(static_cast<size_t>(src.num_vertices()), false);
  for (EdgeId e = 0; e < src.num_edges(); ++e) {
    keep_edge[static_cast<size_t>(e)] = edge_level(src, e) <= lmax;
    if (keep_edge[static_cast<size_t>(e)]) {
      touched[static_cast<size_t>(src.edge(e).u)] = true;
      touched[static_cast<size_t>(src.edge(e).v)] = true;
    }
  }
  Graph g;
  std::vector<VertexId> image(static_cast<size_t>(src.num_vertices()), -1);
  for (VertexId v = 0; v < src.num_vertices(); ++v) {
    if (touched[static_cast<size_t>(v)] || full.is_required(v)) image[static_cast<size_t>(v)] = g.add_vertex(src.label(v));
  }
  for (EdgeId e = 0; e < src.num_edges(); ++e) {
    if (!keep_edge[static_cast<size_t>(e)]) continue;
    g.add_edge(image[static_cast<size_t>(src.edge(e).u)], image[static_cast<size_t>(src.edge(e).v)], src.cost(e));
  }
  std::vector<VertexId> required;
  for (VertexId r : full.required) required.push_back(image[static_cast<size_t>(r)]);
  if (!g.is_connected()) throw InstanceError("level restriction disconnects the instance");
  return make_instance(std::move(g), std::move(required), params_name("level", {d, s, lmax}));
}

SteinerInstance gen_multiway_dual(int s, int delta) {
  check_simplified_params(2, s, delta);
  const int q = 2 * s - 3 * delta + 1;
  const int radius = s - delta;
  Graph g;
  PointIndex index;
  for (auto& p : enumerate_simplex(2, q)) {
    if (p.max_coord() > radius) continue;
    VertexId v = g.add_vertex(p);
    index.emplace(std::move(p), v);
  }
  auto has_zero = [](const SimplexPoint& p) {
    return std::find(p.coords.begin(), p.coords.end(), 0) != p.coords.end();
  };
  std::vector<EdgeSpec> specs;
  for (const auto& [p, v] : index) {
    for (int i = 0; i <= 2; ++i) {
      for (int j = 0; j <= 2; ++j) {
        if (i == j || p[i] == 0) continue;
        SimplexPoint w = p;
        --w.coords[static_cast<size_t>(i)];
        ++w.coords[static_cast<size_t>(j)];
        auto it = index.find(w);
        if (it == index.end() || it->second < v) continue;
        // Dual of a primal edge on the boundary of the core costs like an
        // antenna edge; interior duals are unit.
        bool boundary = false;
        for (int k = 0; k <= 2; ++k) boundary |= (p[k] == 0 && w[k] == 0);
        specs.push_back({v, it->second, Rational(boundary ? 2 * delta : 1)});
      }
    }
  }
  std::vector<VertexId> required;
  for (int i = 0; i <= 2; ++i) {
    VertexId r = g.add_vertex(corner(2, q, i));
    required.push_back(r);
    for (const auto& [p, v] : index) {
      if (p[i] == radius) specs.push_back({r, v, Rational(has_zero(p) ? 2 * delta : 2)});
    }
  }
  add_sorted_edges(g, std::move(specs));
  return make_instance(std::move(g), std::move(required), params_name("dual", {s, delta}));
}

int corner_index(const SteinerInstance& inst, VertexId v) {
  const auto* p = std::get_if<SimplexPoint>(&inst.graph.label(v));
  if (!p) return -1;
  auto supp = support(*p);
  return supp.size() == 1 ? supp.front() : -1;
}

}  // namespace steiner_gap
