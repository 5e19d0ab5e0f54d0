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

#include "steiner_gap/constructions.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "steiner_gap/simplex_geometry.hpp"

namespace steiner_gap {

namespace {

VertexId role_vertex(const Graph& g, GoemansRole role) {
  auto v = g.find_vertex(role);
  if (!v) throw ConstructionError("goemans instance lacks a gadget vertex");
  return *v;
}

// Vertex lookup by simplex point label.
class PointLookup {
 public:
  explicit PointLookup(const Graph& g) {
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (const auto* p = std::get_if<SimplexPoint>(&g.label(v))) index_.emplace(*p, v);
    }
  }
  std::optional<VertexId> find(const SimplexPoint& p) const {
    auto it = index_.find(p);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  VertexId at(const SimplexPoint& p) const {
    auto v = find(p);
    if (!v) throw ConstructionError("point " + p.to_string() + " is not a vertex");
    return *v;
  }

 private:
  std::map<SimplexPoint, VertexId> index_;
};

SimplexPoint shifted(SimplexPoint p, int i, int by) {
  p.coords[static_cast<size_t>(i)] += by;
  return p;
}

// Accumulates flow on arcs addressed by their end points.
class FlowBuilder {
 public:
  FlowBuilder(const Graph& g, const PointLookup& lookup)
      : g_(g), lookup_(lookup), flow_(static_cast<size_t>(g.num_arcs()), Rational(0)) {}

  void add(const SimplexPoint& tail, const SimplexPoint& head, const Rational& value) {
    if (value.is_zero()) return;
    ArcId a = g_.arc_between(lookup_.at(tail), lookup_.at(head));
    flow_[static_cast<size_t>(a)] += value;
  }

  ArcValues take() { return std::move(flow_); }

 private:
  const Graph& g_;
  const PointLookup& lookup_;
  ArcValues flow_;
};

bool in_class(GadgetClass c, int x0, int x1, int x2, int delta) {
  const int x[3] = {x0, x1, x2};
  const int t = static_cast<int>(c) % 3;
  const bool a_class = static_cast<int>(c) < 3;
  const int o1 = x[(t + 1) % 3];
  const int o2 = x[(t + 2) % 3];
  if (a_class) return x[t] <= delta - 1 && std::min(o1, o2) >= delta;
  return x[t] >= delta && std::max(o1, o2) <= delta - 1;
}

// Applies the matching rule on the gadget spanned by the three coordinates
// `axes`: flow gamma into every layer-(s+1) point w from w - e_t when w lies
// in class A_t or B_t.
void add_matching(FlowBuilder& fb, const std::vector<SimplexPoint>& upper_points, const int axes[3], int delta,
                  const Rational& gamma) {
  for (const SimplexPoint& w : upper_points) {
    GadgetClass c = gadget_class(w[axes[0]], w[axes[1]], w[axes[2]], delta);
    int t = axes[static_cast<int>(c) % 3];
    fb.add(shifted(w, t, -1), w, gamma);
  }
}

// Path flow values along p edges: forward then backward per edge.
std::pair<Rational, Rational> path_values(int p, int i, const Rational& gamma) {
  return {Rational(i) * gamma, Rational(p - 1 - i) * gamma};
}

Rational binom(int64_t n, int64_t k) { return Rational(binomial(n, k)); }

}  // namespace

McfrSolution goemans_fractional(int d) { return goemans_fractional(gen_goemans_instance(d)); }

McfrSolution goemans_fractional(const SteinerInstance& goemans) {
  const Graph& g = goemans.graph;
  const int d = static_cast<int>(goemans.required.size()) - 1;
  if (d < 1) throw ConstructionError("goemans instance needs d >= 1");
  const Rational share(1, d);
  const VertexId r = role_vertex(g, {'r'});
  McfrSolution sol;
  sol.root = r;
  sol.u.assign(static_cast<size_t>(g.num_edges()), share);
  sol.f.assign(static_cast<size_t>(g.num_arcs()), Rational(0));
  auto a = [&](int i) { return role_vertex(g, {'a', i}); };
  auto s = [&](int i) { return role_vertex(g, {'s', i}); };
  auto b = [&](int i, int j) { return role_vertex(g, {'b', std::min(i, j), std::max(i, j)}); };
  auto c = [&](int i, int j) { return role_vertex(g, {'c', std::min(i, j), std::max(i, j)}); };
  for (int i = 1; i <= d; ++i) {
    ArcValues gi(static_cast<size_t>(g.num_arcs()), Rational(0));
    auto route = [&](std::initializer_list<VertexId> walk) {
      std::vector<VertexId> w(walk);
      for (size_t k = 0; k + 1 < w.size(); ++k) gi[static_cast<size_t>(g.arc_between(w[k], w[k + 1]))] = share;
    };
    route({r, a(i), s(i)});
    for (int j = 1; j <= d; ++j) {
      if (j != i) route({r, a(j), c(i, j), b(i, j), s(i)});
    }
    for (size_t x = 0; x < gi.size(); ++x) sol.f[x] = max(sol.f[x], gi[x]);
    sol.g[s(i)] = std::move(gi);
  }
  return sol;
}

LineFlow path_flow(int p, const Rational& gamma) {
  if (p < 1) throw ConstructionError("path length must be at least 1");
  if (gamma.sign() < 0) throw ConstructionError("gamma must be nonnegative");
  LineFlow out;
  out.graph = Graph(p + 1);
  for (int i = 0; i < p; ++i) out.graph.add_edge(i, i + 1, Rational(1));
  out.flow.assign(static_cast<size_t>(out.graph.num_arcs()), Rational(0));
  for (int i = 0; i < p; ++i) {
    auto [forward, backward] = path_values(p, i, gamma);
    out.flow[static_cast<size_t>(out.graph.arc_between(i, i + 1))] = forward;
    out.flow[static_cast<size_t>(out.graph.arc_between(i + 1, i))] = backward;
  }
  out.balance.assign(static_cast<size_t>(p + 1), Rational(2) * gamma);
  out.balance.front() = -Rational(p - 1) * gamma;
  out.balance.back() = -Rational(p - 1) * gamma;
  return out;
}

GadgetClass gadget_class(int x0, int x1, int x2, int delta) {
  GadgetClass found = GadgetClass::A1;
  int hits = 0;
  for (GadgetClass c : {GadgetClass::A1, GadgetClass::A2, GadgetClass::A3, GadgetClass::B1, GadgetClass::B2,
                        GadgetClass::B3}) {
    if (in_class(c, x0, x1, x2, delta)) {
      found = c;
      ++hits;
    }
  }
  if (hits != 1) {
    throw ConstructionError("point (" + std::to_string(x0) + "," + std::to_string(x1) + "," + std::to_string(x2) +
                            ") lies in " + std::to_string(hits) + " gadget classes");
  }
  return found;
}

GadgetFlow matching_flow(int s, int delta, const Rational& gamma) {
  if (delta < 1 || s != 3 * delta - 2) throw ConstructionError("matching gadget needs s = 3 delta - 2");
  GadgetFlow out;
  Graph& g = out.graph;
  std::vector<SimplexPoint> upper;
  for (const SimplexPoint& p : enumerate_simplex(2, s)) {
    if (p.max_coord() <= s - delta) {
      g.add_vertex(p);
      out.balance.push_back(gamma);
    }
  }
  for (const SimplexPoint& p : enumerate_simplex(2, s + 1)) {
    if (*std::min_element(p.coords.begin(), p.coords.end()) >= 1 && p.max_coord() <= s - delta + 1) {
      g.add_vertex(p);
      out.balance.push_back(-gamma);
      upper.push_back(p);
    }
  }
  PointLookup lookup(g);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto& p = std::get<SimplexPoint>(g.label(v));
    out.classes.push_back(gadget_class(p[0], p[1], p[2], delta));
    if (p.size() != s) continue;
    for (int i = 0; i < 3; ++i) {
      if (auto w = lookup.find(shifted(p, i, 1))) g.add_edge(v, *w, Rational(1));
    }
  }
  FlowBuilder fb(g, lookup);
  const int axes[3] = {0, 1, 2};
  add_matching(fb, upper, axes, delta, gamma);
  out.flow = fb.take();
  return out;
}

Rational LevelProfile::at(int l) const {
  if (l < 1 || l >= static_cast<int>(usage.size())) return Rational(0);
  return usage[static_cast<size_t>(l)];
}

void check_construction_params(int d, int s, int delta) {
  if (d < 2) throw ConstructionError("construction needs d >= 2");
  if (delta < 1 || 2 * delta > s) throw ConstructionError("construction needs 1 <= delta and 2 delta <= s");
  if (d >= 3 && s != 3 * delta - 2) throw ConstructionError("construction needs s = 3 delta - 2 for d >= 3");
}

LevelProfile level_profile(int d, int s, int delta) {
  check_construction_params(d, s, delta);
  LevelProfile out;
  out.d = d;
  out.usage.assign(static_cast<size_t>(d) + 1, Rational(0));
  const Rational scale = binom(d + 1, 2) * Rational(2 * s - 3 * delta + 1);
  out.usage[1] = Rational((d + 1) * s - d * (3 * delta - 2) - 1) / scale;
  out.usage[2] = Rational(3) / scale;
  return out;
}

BalanceProfile balance_profile(const LevelProfile& profile) {
  BalanceProfile out;
  const int d = profile.d;
  for (int l = 0; l <= d; ++l) {
    out.b0.push_back(Rational(l - 1) * profile.at(l) + Rational(d - l) * profile.at(l + 1));
    out.b1.push_back(-Rational(l - 1) * profile.at(l));
  }
  return out;
}

SplitFlow simplified_simplex_flow(int d, int s, int delta, int k) {
  check_construction_params(d, s, delta);
  if (k < 0 || k > d) throw ConstructionError("corner index out of range");
  SplitFlow out;
  out.split = gen_split_simplified_graph(d, s, delta);
  out.profile = level_profile(d, s, delta);
  const Graph& g = out.split.graph;
  const LevelProfile& u = out.profile;
  const BalanceProfile bp = balance_profile(u);
  PointLookup lookup(g);

  out.usage.resize(static_cast<size_t>(g.num_edges()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) out.usage[static_cast<size_t>(e)] = u.at(edge_level(g, e));
  out.balance.resize(static_cast<size_t>(g.num_vertices()));
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto& p = std::get<SimplexPoint>(g.label(v));
    const int l = level(p);
    const int owner = out.split.aux_owner[static_cast<size_t>(v)];
    Rational& b = out.balance[static_cast<size_t>(v)];
    if (owner >= 0) {
      b = owner == k ? u.at(l) : -u.at(l);
    } else {
      b = p.size() == s ? bp.b0[static_cast<size_t>(l)] : bp.b1[static_cast<size_t>(l)];
    }
  }

  FlowBuilder fb(g, lookup);
  // Upper-layer vertices whose support contains k: flow out along the k
  // direction and in along every other direction.
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto& w = std::get<SimplexPoint>(g.label(v));
    if (w.size() != s + 1 || w[k] == 0) continue;
    const Rational value = u.at(level(w));
    for (int i : support(w)) {
      SimplexPoint down = shifted(w, i, -1);
      if (!lookup.find(down)) continue;
      if (i == k) {
        fb.add(w, down, value);
      } else {
        fb.add(down, w, value);
      }
    }
  }
  // Level-one lines with support {i, j} not containing k: path flow
  // from the auxiliary vertex of corner i to that of corner j, routed
  // through the pass-through upper-layer vertices.
  const Rational gamma = u.at(2);
  const int p = s - 2 * delta + 2;
  auto line_point = [&](int i, int j, int xi, int xj) {
    SimplexPoint q{std::vector<int>(static_cast<size_t>(d) + 1, 0)};
    q.coords[static_cast<size_t>(i)] = xi;
    q.coords[static_cast<size_t>(j)] = xj;
    return q;
  };
  for (int i = 0; i <= d; ++i) {
    for (int j = i + 1; j <= d; ++j) {
      if (i == k || j == k) continue;
      // Path vertices: auxiliary end, s - 2 delta + 1 lower-layer points, auxiliary end.
      std::vector<SimplexPoint> stops{line_point(i, j, s - delta + 1, delta)};
      for (int t = 0; t <= s - 2 * delta; ++t) stops.push_back(line_point(i, j, s - delta - t, delta + t));
      stops.push_back(line_point(i, j, delta, s - delta + 1));
      for (int e = 0; e < p; ++e) {
        auto [forward, backward] = path_values(p, e, gamma);
        const SimplexPoint& from = stops[static_cast<size_t>(e)];
        const SimplexPoint& to = stops[static_cast<size_t>(e) + 1];
        std::vector<SimplexPoint> hops{from};
        if (from.size() == s && to.size() == s) hops.push_back(shifted(from, j, 1));
        hops.push_back(to);
        for (size_t h = 0; h + 1 < hops.size(); ++h) {
          fb.add(hops[h], hops[h + 1], forward);
          fb.add(hops[h + 1], hops[h], backward);
        }
      }
    }
  }
  // Level-two gadgets on every three-element support avoiding k.
  if (d >= 3) {
    for (int i = 0; i <= d; ++i) {
      for (int j = i + 1; j <= d; ++j) {
        for (int m = j + 1; m <= d; ++m) {
          if (i == k || j == k || m == k) continue;
          const int axes[3] = {i, j, m};
          std::vector<SimplexPoint> upper;
          for (VertexId v = 0; v < g.num_vertices(); ++v) {
            const auto& w = std::get<SimplexPoint>(g.label(v));
            if (w.size() == s + 1 && support(w) == std::vector<int>{i, j, m}) upper.push_back(w);
          }
          add_matching(fb, upper, axes, delta, gamma);
        }
      }
    }
  }
  out.flow = fb.take();
  return out;
}

MbfrSolution simplified_simplex_solution(const SteinerInstance& simplified, int d, int s, int delta) {
  check_construction_params(d, s, delta);
  const Graph& g = simplified.graph;
  PointLookup lookup(g);
  LevelProfile u = level_profile(d, s, delta);
  BalanceProfile bp = balance_profile(u);
  std::vector<VertexId> corner_vertex(static_cast<size_t>(d) + 1, -1);
  for (VertexId r : simplified.required) {
    int i = corner_index(simplified, r);
    if (i < 0) throw ConstructionError("required vertex is not a corner");
    corner_vertex[static_cast<size_t>(i)] = r;
  }

  MbfrSolution sol;
  sol.u.resize(static_cast<size_t>(g.num_edges()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) sol.u[static_cast<size_t>(e)] = u.at(edge_level(g, e));
  sol.b.resize(static_cast<size_t>(g.num_vertices()));
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (simplified.is_required(v)) {
      sol.b[static_cast<size_t>(v)] = Rational(-1);
      continue;
    }
    const auto& p = std::get<SimplexPoint>(g.label(v));
    const int l = level(p);
    sol.b[static_cast<size_t>(v)] = p.size() == s ? bp.b0[static_cast<size_t>(l)] : bp.b1[static_cast<size_t>(l)];
  }

  for (int k = 0; k <= d; ++k) {
    SplitFlow split = simplified_simplex_flow(d, s, delta, k);
    const Graph& sg = split.split.graph;
    std::vector<VertexId> image(static_cast<size_t>(sg.num_vertices()));
    for (VertexId v = 0; v < sg.num_vertices(); ++v) {
      int owner = split.split.aux_owner[static_cast<size_t>(v)];
      image[static_cast<size_t>(v)] =
          owner >= 0 ? corner_vertex[static_cast<size_t>(owner)] : lookup.at(std::get<SimplexPoint>(sg.label(v)));
    }
    ArcValues f(static_cast<size_t>(g.num_arcs()), Rational(0));
    for (ArcId a = 0; a < sg.num_arcs(); ++a) {
      const Rational& value = split.flow[static_cast<size_t>(a)];
      if (value.is_zero()) continue;
      DirectedEdge de = sg.arc(a);
      f[static_cast<size_t>(g.arc_between(image[static_cast<size_t>(de.tail)], image[static_cast<size_t>(de.head)]))] +=
          value;
    }
    sol.f[corner_vertex[static_cast<size_t>(k)]] = std::move(f);
  }
  return sol;
}

Rational closed_form_cost(int d, int s, int delta) {
  check_construction_params(d, s, delta);
  const Rational q(2 * s - 3 * delta + 1);
  return Rational(s * (d + 1)) +
         Rational(3, 2) * Rational(s - delta) * Rational(s - delta + 1) / q * Rational(d - 1);
}

Rational closed_form_cost_dual_cases(int s, int alpha) {
  if (alpha < 0 || alpha > 2 || (s + alpha) % 3 != 0) {
    throw ConstructionError("dual cases need alpha in {0, 1, 2} with 3 | s + alpha");
  }
  check_construction_params(2, s, (s + alpha) / 3);
  const Rational x(s);
  switch (alpha) {
    case 0: return (Rational(11) * x * x + Rational(12) * x) / (Rational(3) * (x + Rational(1)));
    case 1: return (Rational(11) * x * x + x - Rational(1)) / (Rational(3) * x);
    default: return (Rational(11) * x + Rational(1)) / Rational(3);
  }
}

Rational gap_lower_bound(int d, int s) {
  if (d < 2) throw ConstructionError("gap bound needs d >= 2");
  if ((s + 2) % 3 != 0 || s < 4) throw ConstructionError("gap bound needs s = 3 delta - 2 with delta >= 2");
  return Rational(6 * d) / (Rational(5 * d + 1) + Rational(d - 1, s));
}

Rational gap_limit(int k) {
  if (k < 2) throw ConstructionError("gap limit needs k >= 2");
  return Rational(6 * (k - 1)) / Rational(5 * (k - 1) + 1);
}

}  // namespace steiner_gap
