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


#include <gtest/gtest.h>

#include <set>

#include "steiner_gap/instances.hpp"
#include "steiner_gap/simplex_geometry.hpp"

namespace steiner_gap {
namespace {

const SimplexPoint& point(const Graph& g, VertexId v) { return std::get<SimplexPoint>(g.label(v)); }

int layer(const SimplexPoint& p) {
  int sum = 0;
  for (int c : p.coords) sum += c;
  return sum;
}

// Edge multiset as sorted (label, label, cost) strings, independent of ids.
std::multiset<std::string> edge_signature(const Graph& g) {
  std::multiset<std::string> out;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    std::string a = label_to_string(g.label(g.edge(e).u));
    std::string b = label_to_string(g.label(g.edge(e).v));
    if (b < a) std::swap(a, b);
    out.insert(a + "|" + b + "|" + g.cost(e).to_string());
  }
  return out;
}

TEST(Graph, AddEdgeMergesParallelAndRejectsLoops) {
  Graph g(3);
  EdgeId e = g.add_edge(0, 1, Rational(5));
  EXPECT_EQ(g.add_edge(1, 0, Rational(3)), e);
  EXPECT_EQ(g.cost(e), Rational(3));
  EXPECT_EQ(g.add_edge(0, 1, Rational(4)), e);
  EXPECT_EQ(g.cost(e), Rational(3));
  EXPECT_THROW(g.add_edge(2, 2, Rational(1)), GraphError);
  EXPECT_THROW(g.add_edge(0, 2, Rational(-1)), GraphError);
}

TEST(Graph, ArcNumbering) {
  Graph g(3);
  g.add_edge(2, 0, Rational(1));
  EXPECT_EQ(g.arc(0), (DirectedEdge{0, 2}));
  EXPECT_EQ(g.arc(1), (DirectedEdge{2, 0}));
  EXPECT_EQ(g.arc_between(2, 0), 1);
  EXPECT_EQ(Graph::reverse(0), 1);
  EXPECT_EQ(g.out_arcs(0), std::vector<ArcId>{0});
  EXPECT_EQ(g.in_arcs(0), std::vector<ArcId>{1});
}

TEST(Graph, InstanceValidation) {
  Graph g(3);
  g.add_edge(0, 1, Rational(1));
  EXPECT_THROW(make_instance(g, {0, 2}, "disconnected"), InstanceError);
  EXPECT_THROW(make_instance(g, {0, 7}, "bad"), std::exception);
}

TEST(Instances, SmallSimplexSizes) {
  SteinerInstance si = gen_simplex_instance(2, 2);
  EXPECT_EQ(si.num_vertices(), 13);
  EXPECT_EQ(si.num_edges(), 15);
  EXPECT_EQ(si.required.size(), 3u);
  for (EdgeId e = 0; e < si.num_edges(); ++e) {
    EXPECT_EQ(si.graph.cost(e), Rational(1));
    int la = layer(point(si.graph, si.graph.edge(e).u));
    int lb = layer(point(si.graph, si.graph.edge(e).v));
    EXPECT_EQ(std::abs(la - lb), 1);
    EXPECT_EQ(std::min(la, lb), 2);
  }
  SteinerInstance tiny = gen_simplex_instance(1, 1);
  EXPECT_EQ(tiny.required.size(), 2u);
  EXPECT_TRUE(tiny.graph.is_connected());
}

TEST(Instances, SimplexVertexSetMatchesEnumeration) {
  for (int d = 1; d <= 3; ++d) {
    for (int s = 1; s <= 4; ++s) {
      SteinerInstance si = gen_simplex_instance(d, s);
      int expected = static_cast<int>(count_simplex(d, s));
      for (const auto& p : enumerate_simplex(d, s + 1)) expected += p.max_coord() <= s;
      EXPECT_EQ(si.num_vertices(), expected) << d << "," << s;
      for (VertexId r : si.required) EXPECT_EQ(point(si.graph, r).max_coord(), s);
    }
  }
}

TEST(Instances, SimplifiedDegrees) {
  for (auto [d, s, delta] : std::vector<std::tuple<int, int, int>>{{2, 4, 2}, {2, 9, 3}, {3, 4, 2}, {3, 5, 2}, {4, 4, 2}}) {
    SteinerInstance si = gen_simplified_simplex_instance(d, s, delta);
    const Graph& g = si.graph;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      int deg = static_cast<int>(g.incident(v).size());
      if (si.is_required(v)) {
        EXPECT_EQ(deg, static_cast<int>(count_simplex(d - 1, delta))) << si.name;
        for (EdgeId e : g.incident(v)) EXPECT_EQ(g.cost(e), Rational(2 * delta));
      } else if (layer(point(g, v)) == s) {
        EXPECT_EQ(deg, d + 1) << si.name << " " << point(g, v).to_string();
      } else {
        EXPECT_EQ(deg, level(point(g, v)) + 1) << si.name << " " << point(g, v).to_string();
      }
    }
  }
  SteinerInstance small = gen_simplified_simplex_instance(3, 4, 2);
  EXPECT_EQ(small.graph.incident(small.required[0]).size(), 6u);
  EXPECT_THROW(gen_simplified_simplex_instance(2, 3, 2), InstanceError);
  EXPECT_THROW(gen_simplified_simplex_instance(2, 3, 0), InstanceError);
}

TEST(Instances, AntennaEndpointsHaveCoordinateAtRadius) {
  SteinerInstance si = gen_simplified_simplex_instance(2, 4, 2);
  for (VertexId r : si.required) {
    int i = corner_index(si, r);
    ASSERT_GE(i, 0);
    for (EdgeId e : si.graph.incident(r)) {
      EXPECT_EQ(si.graph.cost(e), Rational(4));
      EXPECT_EQ(point(si.graph, si.graph.other(e, r))[i], 2);
    }
  }
}

TEST(Instances, SplitGraphAuxiliarySets) {
  SplitGraph split = gen_split_simplified_graph(2, 9, 3);
  std::set<VertexId> seen;
  for (const auto& set : split.aux_sets) {
    EXPECT_EQ(set.size(), 4u);
    for (VertexId v : set) EXPECT_TRUE(seen.insert(v).second);
  }
  for (auto [d, s, delta] : std::vector<std::tuple<int, int, int>>{{2, 4, 2}, {2, 9, 3}, {3, 4, 2}}) {
    SplitGraph sg = gen_split_simplified_graph(d, s, delta);
    SteinerInstance contracted = contract_split_graph(sg);
    SteinerInstance direct = gen_simplified_simplex_instance(d, s, delta);
    EXPECT_EQ(edge_signature(contracted.graph), edge_signature(direct.graph));
    EXPECT_EQ(contracted.num_vertices(), direct.num_vertices());
  }
}

TEST(Instances, GoemansSizesAndMinor) {
  for (int d = 1; d <= 5; ++d) {
    SteinerInstance gi = gen_goemans_instance(d);
    int pairs = d * (d - 1) / 2;
    EXPECT_EQ(gi.num_edges(), 2 * d + 5 * pairs);
    EXPECT_EQ(gi.num_vertices() - static_cast<int>(gi.required.size()), d + 2 * pairs);
    if (d <= 4) {
      SteinerInstance si = gen_simplex_instance(d, 2);
      MinorMap map = goemans_minor_map(gi, si);
      EXPECT_EQ(check_minor_map(gi, si, map), "") << "d=" << d;
    }
  }
}

TEST(Instances, MinorCheckerRejectsBrokenMap) {
  SteinerInstance gi = gen_goemans_instance(2);
  SteinerInstance si = gen_simplex_instance(2, 2);
  MinorMap map = goemans_minor_map(gi, si);
  map.edge_paths[0].pop_back();
  EXPECT_NE(check_minor_map(gi, si, map), "");
}

TEST(Instances, LevelRestriction) {
  SteinerInstance full = gen_simplex_instance(2, 2);
  SteinerInstance same = gen_level_restricted(2, 2, 2);
  EXPECT_EQ(edge_signature(same.graph), edge_signature(full.graph));
  SteinerInstance big = gen_simplex_instance(3, 3);
  SteinerInstance cut = gen_level_restricted(3, 3, 2);
  EXPECT_LT(cut.num_edges(), big.num_edges());
  auto sub = edge_signature(cut.graph);
  auto all = edge_signature(big.graph);
  EXPECT_TRUE(std::includes(all.begin(), all.end(), sub.begin(), sub.end()));
  for (EdgeId e = 0; e < cut.num_edges(); ++e) EXPECT_LE(edge_level(cut.graph, e), 2);
}

TEST(Instances, MultiwayDualCorners) {
  for (auto [s, delta] : std::vector<std::pair<int, int>>{{4, 2}, {9, 3}}) {
    SteinerInstance dual = gen_multiway_dual(s, delta);
    const int q = 2 * s - 3 * delta + 1;
    for (VertexId r : dual.required) {
      const SimplexPoint& p = point(dual.graph, r);
      EXPECT_EQ(p.max_coord(), q);
      EXPECT_EQ(layer(p), q);
    }
    EXPECT_TRUE(dual.graph.is_connected());
  }
}

TEST(Instances, Deterministic) {
  EXPECT_EQ(edge_signature(gen_simplex_instance(3, 2).graph), edge_signature(gen_simplex_instance(3, 2).graph));
  SteinerInstance a = gen_simplified_simplex_instance(2, 7, 3);
  SteinerInstance b = gen_simplified_simplex_instance(2, 7, 3);
  for (EdgeId e = 0; e < a.num_edges(); ++e) {
    EXPECT_EQ(a.graph.edge(e).u, b.graph.edge(e).u);
    EXPECT_EQ(a.graph.edge(e).v, b.graph.edge(e).v);
  }
}

}  // namespace
}  // namespace steiner_gap
