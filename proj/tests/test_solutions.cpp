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

#include <algorithm>
#include <numeric>
#include <random>

#include "steiner_gap/formulations.hpp"
#include "steiner_gap/graph_algorithms.hpp"
#include "steiner_gap/oracles.hpp"
#include "steiner_gap/solutions.hpp"
#include "support/random_instances.hpp"

namespace steiner_gap {
namespace {

const BaseFormulation kAllBases[] = {BaseFormulation::BCR, BaseFormulation::MCFR, BaseFormulation::MBFR,
                                     BaseFormulation::MBCR, BaseFormulation::STER};

FormulationSolution solve_to_solution(const SteinerInstance& inst, const FormulationKind& kind,
                                      Rational* objective = nullptr) {
  CompiledLp c = compile(inst, kind);
  LpOutcome out = solve_exact(c.lp);
  EXPECT_EQ(out.status, LpStatus::Optimal);
  if (objective != nullptr) *objective = out.objective;
  return unpack(c, out.values);
}

TreeSolution make_tree(const Graph& g, std::vector<EdgeId> edges) {
  std::sort(edges.begin(), edges.end());
  return TreeSolution{edges, edge_set_cost(g, edges)};
}

// Star with Steiner center 0 and required leaves 1..3, plus a spare vertex 4
// hanging off leaf 1, and chords between the leaves.
SteinerInstance star_instance() {
  Graph g(5);
  g.add_edge(0, 1, Rational(1));
  g.add_edge(0, 2, Rational(1));
  g.add_edge(0, 3, Rational(1));
  g.add_edge(1, 4, Rational(1));
  g.add_edge(1, 2, Rational(3));
  g.add_edge(2, 3, Rational(3));
  return make_instance(std::move(g), {1, 2, 3}, "star");
}

Rational cut_usage(const Graph& g, const EdgeValues& u, uint32_t mask) {
  Rational total;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    bool a = (mask >> g.edge(e).u) & 1U;
    bool b = (mask >> g.edge(e).v) & 1U;
    if (a != b) total += u[static_cast<size_t>(e)];
  }
  return total;
}

Rational set_balance(const VertexValues& b, uint32_t mask) {
  Rational total;
  for (size_t v = 0; v < b.size(); ++v) {
    if ((mask >> v) & 1U) total += b[v];
  }
  return total;
}

TEST(Solutions, CanonicalTreeSolutionsVerifyForAllKinds) {
  SteinerInstance inst = star_instance();
  const Graph& g = inst.graph;
  TreeSolution star = make_tree(g, {*g.find_edge(0, 1), *g.find_edge(0, 2), *g.find_edge(0, 3)});
  for (BaseFormulation base : kAllBases) {
    for (bool plus : {false, true}) {
      FormulationKind kind{base, plus, -1};
      FormulationSolution sol = steiner_tree_to_solution(inst, star, kind);
      std::string why;
      EXPECT_TRUE(verify(inst, kind, sol, &why)) << to_string(kind) << ": " << why;
      EXPECT_EQ(solution_objective(inst, sol), Rational(3));
    }
  }
}

TEST(Solutions, SteinerLeafFailsOnlyThePlusVariant) {
  SteinerInstance inst = star_instance();
  const Graph& g = inst.graph;
  // Vertex 4 is a Steiner leaf.
  TreeSolution tree = make_tree(g, {*g.find_edge(0, 1), *g.find_edge(0, 2), *g.find_edge(0, 3), *g.find_edge(1, 4)});
  for (BaseFormulation base : kAllBases) {
    FormulationSolution sol = steiner_tree_to_solution(inst, tree, {base, false, -1});
    EXPECT_TRUE(verify(inst, {base, false, -1}, sol)) << to_string(base);
    EXPECT_FALSE(verify(inst, {base, true, -1}, sol)) << to_string(base);
  }
}

TEST(Solutions, ZeroSolutionFailsRootCut) {
  SteinerInstance inst = star_instance();
  BcrSolution zero{1, EdgeValues(static_cast<size_t>(inst.num_edges())),
                   ArcValues(static_cast<size_t>(inst.graph.num_arcs()))};
  std::string why;
  EXPECT_FALSE(verify(inst, {BaseFormulation::BCR, false, 1}, zero, &why));
  // Cut rows are named by the bit mask of X; X = {1} has mask 2.
  EXPECT_NE(why.find("_2 "), std::string::npos) << why;
}

TEST(Solutions, ShapeAndKindMismatchesThrow) {
  SteinerInstance inst = star_instance();
  MbcrSolution short_u{EdgeValues(2), VertexValues(5)};
  EXPECT_THROW(verify(inst, {BaseFormulation::MBCR, false, -1}, short_u), SolutionError);
  MbcrSolution ok{EdgeValues(static_cast<size_t>(inst.num_edges())), VertexValues(5)};
  EXPECT_THROW(verify(inst, {BaseFormulation::STER, false, -1}, ok), SolutionError);
}

TEST(Solutions, SolverOptimaVerify) {
  for (uint32_t seed = 1; seed <= 6; ++seed) {
    SteinerInstance inst = testing::random_instance(seed);
    for (BaseFormulation base : kAllBases) {
      for (bool plus : {false, true}) {
        FormulationKind kind{base, plus, -1};
        Rational objective;
        FormulationSolution sol = solve_to_solution(inst, kind, &objective);
        std::string why;
        EXPECT_TRUE(verify(inst, kind, sol, &why)) << to_string(kind) << " seed " << seed << ": " << why;
        EXPECT_EQ(solution_objective(inst, sol), objective);
      }
    }
  }
}

TEST(Solutions, McfrMbfrRoundTripPreservesUsage) {
  for (uint32_t seed = 1; seed <= 20; ++seed) {
    SteinerInstance inst = testing::random_instance(seed);
    for (bool plus : {false, true}) {
      auto mbfr = std::get<MbfrSolution>(solve_to_solution(inst, {BaseFormulation::MBFR, plus, -1}));
      McfrSolution mcfr = translate_mbfr_to_mcfr(inst, mbfr, plus);
      std::string why;
      ASSERT_TRUE(verify(inst, {BaseFormulation::MCFR, plus, mcfr.root}, mcfr, &why)) << why;
      EXPECT_EQ(mcfr.u, mbfr.u);
      for (const auto& [s, gs] : mcfr.g) {
        for (size_t a = 0; a < gs.size(); ++a) {
          EXPECT_GE(gs[a], Rational(0));
          EXPECT_LE(gs[a], mcfr.f[a]);
        }
      }
      MbfrSolution back = translate_mcfr_to_mbfr(inst, mcfr, plus);
      ASSERT_TRUE(verify(inst, {BaseFormulation::MBFR, plus, -1}, back, &why)) << why;
      EXPECT_EQ(back.u, mbfr.u) << "seed " << seed;
      EXPECT_EQ(solution_objective(inst, back), solution_objective(inst, mbfr));
    }
  }
}

TEST(Solutions, McfrToMbfrFromEveryRoot) {
  for (uint32_t seed = 21; seed <= 26; ++seed) {
    SteinerInstance inst = testing::random_instance(seed);
    for (VertexId r : inst.required) {
      auto mcfr = std::get<McfrSolution>(solve_to_solution(inst, {BaseFormulation::MCFR, true, r}));
      MbfrSolution mbfr = translate_mcfr_to_mbfr(inst, mcfr, true);
      EXPECT_TRUE(verify(inst, {BaseFormulation::MBFR, true, -1}, mbfr));
      EXPECT_EQ(mbfr.u, mcfr.u);
    }
  }
}

TEST(Solutions, IntegralStarBalanceIsDegreeMinusTwo) {
  SteinerInstance inst = star_instance();
  const Graph& g = inst.graph;
  TreeSolution star = make_tree(g, {*g.find_edge(0, 1), *g.find_edge(0, 2), *g.find_edge(0, 3)});
  auto mcfr = std::get<McfrSolution>(steiner_tree_to_solution(inst, star, {BaseFormulation::MCFR, true, -1}));
  MbfrSolution mbfr = translate_mcfr_to_mbfr(inst, mcfr, true);
  EXPECT_EQ(mbfr.b[0], Rational(1));
  EXPECT_EQ(mbfr.b[1], Rational(-1));
  EXPECT_EQ(mbfr.b[4], Rational(0));
  auto direct = std::get<MbcrSolution>(steiner_tree_to_solution(inst, star, {BaseFormulation::MBCR, true, -1}));
  EXPECT_EQ(direct.b, mbfr.b);
}

TEST(Solutions, UnverifiedInputIsRejected) {
  SteinerInstance inst = star_instance();
  McfrSolution zero{1, EdgeValues(static_cast<size_t>(inst.num_edges())),
                    ArcValues(static_cast<size_t>(inst.graph.num_arcs())), {}};
  zero.g[2] = zero.f;
  zero.g[3] = zero.f;
  EXPECT_THROW(translate_mcfr_to_mbfr(inst, zero), SolutionError);
  SterSolution bad{EdgeValues(static_cast<size_t>(inst.num_edges())), VertexValues(5)};
  EXPECT_THROW(translate_ster_to_mbcr(inst, bad), SolutionError);
}

TEST(BalanceFlow, PathWithCentralSupply) {
  Graph g(3);
  g.add_edge(0, 1, Rational(1));
  g.add_edge(1, 2, Rational(1));
  BalanceFlowResult r = construct_bidirected_balance_flow(g, {Rational(1), Rational(1)},
                                                          {Rational(-1), Rational(2), Rational(-1)});
  ASSERT_TRUE(r.feasible);
  EXPECT_EQ(r.flow[static_cast<size_t>(g.arc_between(1, 0))], Rational(1));
  EXPECT_EQ(r.flow[static_cast<size_t>(g.arc_between(1, 2))], Rational(1));
  EXPECT_EQ(r.flow[static_cast<size_t>(g.arc_between(0, 1))], Rational(0));
  EXPECT_EQ(r.flow[static_cast<size_t>(g.arc_between(2, 1))], Rational(0));
}

TEST(BalanceFlow, ZeroBalancesGiveZeroFlow) {
  SteinerInstance inst = testing::random_instance(3);
  EdgeValues u(static_cast<size_t>(inst.num_edges()), Rational(1));
  BalanceFlowResult r = construct_bidirected_balance_flow(inst.graph, u, VertexValues(static_cast<size_t>(inst.num_vertices())));
  ASSERT_TRUE(r.feasible);
  for (const Rational& x : r.flow) EXPECT_TRUE(x.is_zero());
}

TEST(BalanceFlow, ZeroCapacityYieldsWitness) {
  Graph g(2);
  g.add_edge(0, 1, Rational(1));
  BalanceFlowResult r = construct_bidirected_balance_flow(g, {Rational(0)}, {Rational(1), Rational(-1)});
  EXPECT_FALSE(r.feasible);
  EXPECT_EQ(r.witness, std::vector<VertexId>{0});
}

TEST(BalanceFlow, UnbalancedInputThrows) {
  Graph g(2);
  g.add_edge(0, 1, Rational(1));
  EXPECT_THROW(construct_bidirected_balance_flow(g, {Rational(1)}, {Rational(1), Rational(0)}), SolutionError);
}

// The construction succeeds exactly when every vertex set satisfies the cut
// condition, checked by enumerating all subsets.
TEST(BalanceFlow, MatchesExhaustiveCutCondition) {
  std::mt19937 rng(99);
  int feasible_seen = 0;
  int infeasible_seen = 0;
  for (uint32_t seed = 1; seed <= 60; ++seed) {
    SteinerInstance inst = testing::random_instance(seed, {3, 10, 2, 3, 0, 10, 0.3});
    const Graph& g = inst.graph;
    const int n = g.num_vertices();
    EdgeValues u;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      u.push_back(Rational(std::uniform_int_distribution<int>(0, 4)(rng), 2));
    }
    VertexValues b(static_cast<size_t>(n));
    Rational sum;
    for (int v = 0; v + 1 < n; ++v) {
      b[static_cast<size_t>(v)] = Rational(std::uniform_int_distribution<int>(-3, 3)(rng), 3);
      sum += b[static_cast<size_t>(v)];
    }
    b[static_cast<size_t>(n - 1)] = -sum;

    bool condition = true;
    for (uint32_t mask = 0; mask < (1U << n); ++mask) {
      if (cut_usage(g, u, mask) < set_balance(b, mask)) condition = false;
    }
    BalanceFlowResult r = construct_bidirected_balance_flow(g, u, b);
    EXPECT_EQ(r.feasible, condition) << "seed " << seed;
    if (r.feasible) {
      ++feasible_seen;
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        EXPECT_GE(r.flow[static_cast<size_t>(2 * e)], Rational(0));
        EXPECT_GE(r.flow[static_cast<size_t>(2 * e + 1)], Rational(0));
        EXPECT_LE(r.flow[static_cast<size_t>(2 * e)] + r.flow[static_cast<size_t>(2 * e + 1)], u[static_cast<size_t>(e)]);
      }
      for (VertexId v = 0; v < n; ++v) {
        Rational net;
        for (ArcId a : g.out_arcs(v)) net += r.flow[static_cast<size_t>(a)];
        for (ArcId a : g.in_arcs(v)) net -= r.flow[static_cast<size_t>(a)];
        EXPECT_EQ(net, b[static_cast<size_t>(v)]);
      }
    } else {
      ++infeasible_seen;
      uint32_t mask = 0;
      for (VertexId v : r.witness) mask |= 1U << v;
      EXPECT_LT(cut_usage(g, u, mask), set_balance(b, mask)) << "seed " << seed;
    }
  }
  EXPECT_GT(feasible_seen, 5);
  EXPECT_GT(infeasible_seen, 5);
}

TEST(Solutions, MbcrMbfrRoundTrip) {
  for (uint32_t seed = 1; seed <= 20; ++seed) {
    SteinerInstance inst = testing::random_instance(seed);
    for (bool plus : {false, true}) {
      auto mbcr = std::get<MbcrSolution>(solve_to_solution(inst, {BaseFormulation::MBCR, plus, -1}));
      MbfrSolution mbfr = translate_mbcr_to_mbfr(inst, mbcr, plus);
      std::string why;
      ASSERT_TRUE(verify(inst, {BaseFormulation::MBFR, plus, -1}, mbfr, &why)) << why;
      MbcrSolution back = translate_mbfr_to_mbcr(inst, mbfr, plus);
      EXPECT_EQ(back.u, mbcr.u);
      EXPECT_EQ(back.b, mbcr.b);
    }
  }
}

TEST(Solutions, MbcrSterRoundTrip) {
  for (uint32_t seed = 1; seed <= 20; ++seed) {
    SteinerInstance inst = testing::random_instance(seed);
    for (bool plus : {false, true}) {
      auto mbcr = std::get<MbcrSolution>(solve_to_solution(inst, {BaseFormulation::MBCR, plus, -1}));
      SterSolution ster = translate_mbcr_to_ster(inst, mbcr, plus);
      std::string why;
      ASSERT_TRUE(verify(inst, {BaseFormulation::STER, plus, -1}, ster, &why)) << why;
      EXPECT_EQ(ster.u, mbcr.u);
      MbcrSolution back = translate_ster_to_mbcr(inst, ster, plus);
      EXPECT_EQ(back.u, mbcr.u);
      EXPECT_EQ(back.b, mbcr.b);
    }
  }
}

TEST(Solutions, IntegralTreeGivesZeroOneInclusion) {
  SteinerInstance inst = star_instance();
  const Graph& g = inst.graph;
  TreeSolution star = make_tree(g, {*g.find_edge(0, 1), *g.find_edge(0, 2), *g.find_edge(0, 3)});
  auto mbcr = std::get<MbcrSolution>(steiner_tree_to_solution(inst, star, {BaseFormulation::MBCR, false, -1}));
  SterSolution ster = translate_mbcr_to_ster(inst, mbcr);
  EXPECT_EQ(ster.y, (VertexValues{Rational(1), Rational(1), Rational(1), Rational(1), Rational(0)}));
}

TEST(Solutions, SpanningTreeSolutionCostsMst) {
  for (uint32_t seed = 1; seed <= 5; ++seed) {
    SteinerInstance base = testing::random_instance(seed);
    std::vector<VertexId> all(static_cast<size_t>(base.num_vertices()));
    std::iota(all.begin(), all.end(), 0);
    SteinerInstance inst = make_instance(base.graph, all, "spanning");
    std::vector<EdgeId> edges(static_cast<size_t>(inst.num_edges()));
    std::iota(edges.begin(), edges.end(), 0);
    TreeSolution mst = make_tree(inst.graph, minimum_spanning_forest(inst.graph, edges));
    FormulationSolution sol = steiner_tree_to_solution(inst, mst, {BaseFormulation::MBCR, true, -1});
    EXPECT_TRUE(verify(inst, {BaseFormulation::MBCR, true, -1}, sol));
    EXPECT_EQ(solution_objective(inst, sol), mst.cost);
  }
}

TEST(Solutions, PathCommodityEqualsRootFlow) {
  Graph g(3);
  g.add_edge(0, 1, Rational(1));
  g.add_edge(1, 2, Rational(1));
  g.add_edge(0, 2, Rational(5));
  SteinerInstance inst = make_instance(std::move(g), {0, 2}, "path");
  TreeSolution path = make_tree(inst.graph, {0, 1});
  auto sol = std::get<McfrSolution>(steiner_tree_to_solution(inst, path, {BaseFormulation::MCFR, false, 0}));
  EXPECT_EQ(sol.g.at(2), sol.f);
  EXPECT_EQ(sol.f[static_cast<size_t>(inst.graph.arc_between(0, 1))], Rational(1));
  EXPECT_EQ(sol.f[static_cast<size_t>(inst.graph.arc_between(1, 2))], Rational(1));
}

TEST(Solutions, NonTreeInputThrows) {
  SteinerInstance inst = star_instance();
  TreeSolution broken = make_tree(inst.graph, {*inst.graph.find_edge(0, 1)});
  EXPECT_THROW(steiner_tree_to_solution(inst, broken, {BaseFormulation::MBCR, false, -1}), SolutionError);
}

void expect_exact_decomposition(const SteinerInstance& inst, const McfrSolution& sol, const Rational& objective) {
  ConvexDecomposition dec = decompose_three_terminal(inst, sol);
  ASSERT_TRUE(dec.exact) << inst.name << " " << dec.flag;
  EXPECT_EQ(dec.flag, "");
  Rational total;
  Rational weighted_cost;
  EdgeValues usage(static_cast<size_t>(inst.num_edges()));
  for (const WeightedTree& wt : dec.trees) {
    EXPECT_GT(wt.lambda, Rational(0));
    EXPECT_EQ(check_steiner_tree(inst, wt.tree), "");
    total += wt.lambda;
    weighted_cost += wt.lambda * wt.tree.cost;
    for (EdgeId e : wt.tree.edges) usage[static_cast<size_t>(e)] += wt.lambda;
  }
  EXPECT_EQ(total, Rational(1));
  EXPECT_EQ(usage, sol.u);
  EXPECT_EQ(weighted_cost, objective);
  for (size_t i = 1; i < dec.potentials.size(); ++i) EXPECT_LT(dec.potentials[i], dec.potentials[i - 1]);
}

TEST(Decomposition, IntegralSolutionIsSingleTree) {
  SteinerInstance inst = star_instance();
  const Graph& g = inst.graph;
  TreeSolution star = make_tree(g, {*g.find_edge(0, 1), *g.find_edge(0, 2), *g.find_edge(0, 3)});
  auto sol = std::get<McfrSolution>(steiner_tree_to_solution(inst, star, {BaseFormulation::MCFR, true, -1}));
  ConvexDecomposition dec = decompose_three_terminal(inst, sol);
  ASSERT_EQ(dec.trees.size(), 1U);
  EXPECT_EQ(dec.trees[0].lambda, Rational(1));
  EXPECT_EQ(dec.trees[0].tree.edges, star.edges);
  EXPECT_TRUE(dec.exact);
}

TEST(Decomposition, TriangleWithCenterSplitsIntoEqualCostTrees) {
  Graph g(4);
  g.add_edge(0, 1, Rational(1));
  g.add_edge(1, 2, Rational(1));
  g.add_edge(0, 2, Rational(1));
  for (VertexId v = 0; v < 3; ++v) g.add_edge(v, 3, Rational(2, 3));
  SteinerInstance inst = make_instance(std::move(g), {0, 1, 2}, "triangle_center");
  Rational objective;
  auto sol = std::get<McfrSolution>(solve_to_solution(inst, {BaseFormulation::MCFR, true, -1}, &objective));
  EXPECT_EQ(objective, exact_steiner_tree(inst).optimum);
  expect_exact_decomposition(inst, sol, objective);
  for (const WeightedTree& wt : decompose_three_terminal(inst, sol).trees) EXPECT_EQ(wt.tree.cost, Rational(2));
}

TEST(Decomposition, RandomThreeTerminalInstancesMatchOracle) {
  testing::RandomInstanceShape shape;
  shape.min_vertices = 4;
  shape.max_vertices = 9;
  shape.min_required = 3;
  shape.max_required = 3;
  shape.min_cost = 1;
  for (uint32_t seed = 1; seed <= 20; ++seed) {
    SteinerInstance inst = testing::random_instance(seed, shape);
    Rational objective;
    auto sol = std::get<McfrSolution>(solve_to_solution(inst, {BaseFormulation::MCFR, true, -1}, &objective));
    Rational opt = exact_steiner_tree(inst).optimum;
    EXPECT_EQ(objective, opt) << inst.name;
    expect_exact_decomposition(inst, sol, objective);
    Rational cheapest = decompose_three_terminal(inst, sol).trees.front().tree.cost;
    for (const WeightedTree& wt : decompose_three_terminal(inst, sol).trees) cheapest = min(cheapest, wt.tree.cost);
    EXPECT_EQ(cheapest, opt) << inst.name;
  }
}

// Prunes the minimum spanning tree under random edge weights.
TreeSolution random_steiner_tree(const SteinerInstance& inst, std::mt19937& rng) {
  Graph shuffled = inst.graph;
  for (EdgeId e = 0; e < shuffled.num_edges(); ++e) {
    shuffled.set_cost(e, Rational(std::uniform_int_distribution<int>(0, 1000)(rng)));
  }
  std::vector<EdgeId> edges(static_cast<size_t>(inst.num_edges()));
  std::iota(edges.begin(), edges.end(), 0);
  return prune_to_steiner_tree(inst, minimum_spanning_forest(shuffled, edges));
}

McfrSolution combine(const SteinerInstance& inst, const std::vector<TreeSolution>& trees,
                     const std::vector<Rational>& weights) {
  McfrSolution out;
  for (size_t i = 0; i < trees.size(); ++i) {
    auto part = std::get<McfrSolution>(steiner_tree_to_solution(inst, trees[i], {BaseFormulation::MCFR, true, -1}));
    if (i == 0) {
      out = part;
      for (Rational& x : out.u) x = Rational(0);
      for (Rational& x : out.f) x = Rational(0);
      for (auto& [s, gs] : out.g) {
        for (Rational& x : gs) x = Rational(0);
      }
    }
    for (size_t e = 0; e < out.u.size(); ++e) out.u[e] += weights[i] * part.u[e];
    for (size_t a = 0; a < out.f.size(); ++a) out.f[a] += weights[i] * part.f[a];
    for (auto& [s, gs] : out.g) {
      for (size_t a = 0; a < gs.size(); ++a) gs[a] += weights[i] * part.g.at(s)[a];
    }
  }
  return out;
}

std::vector<Rational> random_weights(size_t k, std::mt19937& rng) {
  std::vector<int> raw;
  int sum = 0;
  for (size_t i = 0; i < k; ++i) {
    raw.push_back(std::uniform_int_distribution<int>(1, 9)(rng));
    sum += raw.back();
  }
  std::vector<Rational> out;
  for (int r : raw) out.push_back(Rational(r, sum));
  return out;
}

// Convex combinations of optimal trees are fractional optimal solutions.
TEST(Decomposition, FractionalOptimalCombinationsDecomposeExactly) {
  std::mt19937 rng(2024);
  testing::RandomInstanceShape shape;
  shape.min_vertices = 5;
  shape.max_vertices = 9;
  shape.min_required = 3;
  shape.max_required = 3;
  shape.min_cost = 1;
  shape.max_cost = 2;
  shape.extra_edge_probability = 0.5;
  int multi_tree = 0;
  for (uint32_t seed = 1; seed <= 20; ++seed) {
    SteinerInstance inst = testing::random_instance(seed, shape);
    SteinerOracleResult oracle = exact_steiner_tree(inst);
    std::vector<TreeSolution> optimal{oracle.tree};
    for (int attempt = 0; attempt < 40; ++attempt) {
      TreeSolution t = random_steiner_tree(inst, rng);
      bool fresh = std::none_of(optimal.begin(), optimal.end(),
                                [&](const TreeSolution& o) { return o.edges == t.edges; });
      if (t.cost == oracle.optimum && fresh) optimal.push_back(t);
    }
    McfrSolution sol = combine(inst, optimal, random_weights(optimal.size(), rng));
    ASSERT_TRUE(verify(inst, {BaseFormulation::MCFR, true, -1}, sol));
    expect_exact_decomposition(inst, sol, oracle.optimum);
    ConvexDecomposition dec = decompose_three_terminal(inst, sol);
    if (dec.trees.size() > 1) ++multi_tree;
    for (const WeightedTree& wt : dec.trees) EXPECT_EQ(wt.tree.cost, oracle.optimum) << inst.name;
  }
  EXPECT_GT(multi_tree, 5);
}

// Without optimality, shrinking f to the commodity maximum can break the
// Steiner-vertex degree rows, and commodity cycles can make the extraction
// paths overlap or leave a circulation behind; decomposition then refuses
// or flags the result. Whenever it succeeds, the
// extraction reproduces the normalized usage.
TEST(Decomposition, ArbitraryTreeCombinations) {
  std::mt19937 rng(77);
  testing::RandomInstanceShape shape;
  shape.min_vertices = 5;
  shape.max_vertices = 9;
  shape.min_required = 3;
  shape.max_required = 3;
  shape.min_cost = 1;
  int decomposed = 0;
  int refused = 0;
  for (uint32_t seed = 1; seed <= 40; ++seed) {
    SteinerInstance inst = testing::random_instance(seed, shape);
    std::vector<TreeSolution> trees;
    for (int k = 0; k < 4; ++k) trees.push_back(random_steiner_tree(inst, rng));
    McfrSolution sol = combine(inst, trees, random_weights(trees.size(), rng));
    ASSERT_TRUE(verify(inst, {BaseFormulation::MCFR, true, -1}, sol));
    McfrSolution normalized = normalize_mcfr(inst, sol);
    EXPECT_LE(solution_objective(inst, normalized), solution_objective(inst, sol));
    if (!verify(inst, {BaseFormulation::MCFR, true, -1}, normalized)) {
      EXPECT_THROW(decompose_three_terminal(inst, sol), DecompositionError);
      ++refused;
      continue;
    }
    ConvexDecomposition dec;
    try {
      dec = decompose_three_terminal(inst, sol);
    } catch (const DecompositionError&) {
      ++refused;
      continue;
    }
    if (!dec.exact) {
      EXPECT_NE(dec.flag, "") << inst.name;
      ++refused;
      continue;
    }
    ++decomposed;
    EdgeValues usage(static_cast<size_t>(inst.num_edges()));
    Rational weighted_cost;
    for (const WeightedTree& wt : dec.trees) {
      EXPECT_EQ(check_steiner_tree(inst, wt.tree), "");
      weighted_cost += wt.lambda * wt.tree.cost;
      for (EdgeId e : wt.tree.edges) usage[static_cast<size_t>(e)] += wt.lambda;
    }
    EXPECT_EQ(usage, normalized.u);
    EXPECT_EQ(weighted_cost, solution_objective(inst, normalized));
  }
  EXPECT_GT(decomposed, 5);
  EXPECT_GT(refused, 0);
}

TEST(Decomposition, RejectsOtherTerminalCounts) {
  SteinerInstance inst = testing::random_instance(4, {5, 6, 4, 4, 1, 5, 0.3});
  auto sol = std::get<McfrSolution>(solve_to_solution(inst, {BaseFormulation::MCFR, true, -1}));
  EXPECT_THROW(decompose_three_terminal(inst, sol), DecompositionError);
}

}  // namespace
}  // namespace steiner_gap
