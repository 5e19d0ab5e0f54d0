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

#include "steiner_gap/constructions.hpp"
#include "steiner_gap/embeddings.hpp"
#include "steiner_gap/formulations.hpp"
#include "steiner_gap/graph_algorithms.hpp"
#include "steiner_gap/instances.hpp"
#include "steiner_gap/lp.hpp"
#include "steiner_gap/oracles.hpp"
#include "support/random_instances.hpp"

namespace steiner_gap {
namespace {

Rational lp_optimum(const SteinerInstance& inst, bool plus) {
  LpOutcome out = solve_exact(compile(inst, FormulationKind{BaseFormulation::MCFR, plus}).lp);
  EXPECT_EQ(out.status, LpStatus::Optimal);
  return out.objective;
}

// Feasible simplex embedding built from terminal distances. With rho half
// the smallest terminal distance, every vertex is within rho of at most one
// terminal; vertices near terminal i move from the base corner towards e_i.
SimplexEmbedding distance_embedding(const SteinerInstance& inst) {
  const size_t n = inst.required.size();
  std::vector<ShortestPaths> sp;
  for (VertexId r : inst.required) sp.push_back(shortest_paths(inst.graph, r));
  Rational closest(-1);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i + 1; j < n; ++j) {
      const Rational& dist = *sp[i].dist[static_cast<size_t>(inst.required[j])];
      if (closest.sign() < 0 || dist < closest) closest = dist;
    }
  }
  const Rational rho = closest / Rational(2);
  SimplexEmbedding emb;
  emb.size = rho / Rational(2);
  for (size_t k = 0; k < n; ++k) emb.terminal_dims.push_back(static_cast<int>(k));
  for (VertexId v = 0; v < inst.graph.num_vertices(); ++v) {
    std::vector<Rational> point(n, Rational(0));
    point[0] = emb.size;
    for (size_t i = 1; i < n; ++i) {
      Rational slack = rho - *sp[i].dist[static_cast<size_t>(v)];
      if (slack.sign() > 0) {
        point[i] = slack / Rational(2);
        point[0] = emb.size - point[i];
      }
    }
    emb.y.push_back(std::move(point));
  }
  return emb;
}

SimplexEmbedding scaled(SimplexEmbedding emb, const Rational& factor) {
  for (auto& point : emb.y) {
    for (Rational& c : point) c *= factor;
  }
  emb.size *= factor;
  return emb;
}

TEST(SimplexEmbedding, CanonicalCoordinatesSitAboveSimplex) {
  for (auto [d, s] : {std::pair{1, 2}, {2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    SteinerInstance inst = gen_simplex_instance(d, s);
    SimplexEmbedding emb = canonical_embedding(inst);
    std::string reason;
    EXPECT_TRUE(verify_se(inst, emb, true, &reason)) << reason;
    // Size-(s+1) points break membership in the size-s simplex.
    EXPECT_FALSE(verify_se(inst, emb, false, &reason));
    EXPECT_NE(reason.find("coordinate sum"), std::string::npos);
    EXPECT_EQ(se_objective(inst, emb), Rational(2 * s * d));
  }
}

TEST(SimplexEmbedding, CanonicalObjectiveMatchesPlusOptimum) {
  for (auto [d, s] : {std::pair{2, 2}, {2, 3}, {3, 2}}) {
    SteinerInstance inst = gen_simplex_instance(d, s);
    EXPECT_EQ(se_objective(inst, canonical_embedding(inst)), lp_optimum(inst, true));
  }
  EXPECT_EQ(se_objective(gen_simplex_instance(2, 2), canonical_embedding(gen_simplex_instance(2, 2))), Rational(8));
  EXPECT_EQ(se_objective(gen_simplex_instance(3, 3), canonical_embedding(gen_simplex_instance(3, 3))), Rational(18));
}

TEST(SimplexEmbedding, ProjectedOneDimensionalEmbeddingIsInside) {
  // On a line every upper point has at most two neighbours, so the centre of
  // its neighbours is within unit distance of both.
  for (int s = 1; s <= 5; ++s) {
    SteinerInstance inst = gen_simplex_instance(1, s);
    SimplexEmbedding emb = canonical_embedding(inst);
    for (VertexId v = 0; v < inst.graph.num_vertices(); ++v) {
      auto& point = emb.y[static_cast<size_t>(v)];
      Rational excess = point[0] + point[1] - Rational(s);
      if (excess.sign() == 0) continue;
      int positive = point[0].sign() > 0 && point[1].sign() > 0 ? 2 : 1;
      for (Rational& c : point) {
        if (c.sign() > 0) c -= excess / Rational(positive);
      }
    }
    std::string reason;
    EXPECT_TRUE(verify_se(inst, emb, false, &reason)) << reason;
    EXPECT_LE(se_objective(inst, emb), lp_optimum(inst, false));
  }
}

TEST(SimplexEmbedding, ScalingPreservesFeasibility) {
  SteinerInstance inst = gen_simplex_instance(2, 2);
  SimplexEmbedding emb = scaled(canonical_embedding(inst), Rational(1, 2));
  EXPECT_TRUE(verify_se(inst, emb, true));
  EXPECT_EQ(se_objective(inst, emb), Rational(4));
  for (uint32_t seed = 0; seed < 10; ++seed) {
    SteinerInstance r = testing::random_instance(seed, {4, 8, 2, 4, 1, 9});
    SimplexEmbedding half = scaled(distance_embedding(r), Rational(1, 2));
    EXPECT_TRUE(verify_se(r, half, false)) << r.name;
  }
}

TEST(SimplexEmbedding, RaisedSteinerVertexNeedsAbove) {
  SteinerInstance inst = gen_simplex_instance(2, 2);
  SimplexEmbedding emb = scaled(canonical_embedding(inst), Rational(1, 2));
  // Raise the size-2 point (1,1,0): the half-scaled image (1/2,1/2,0) moves
  // to (1/2,1/2,1/2), within distance 1 of its neighbours' images.
  VertexId v = *inst.graph.find_vertex(SimplexPoint{{1, 1, 0}});
  emb.y[static_cast<size_t>(v)][2] += Rational(1, 2);
  std::string reason;
  EXPECT_TRUE(verify_se(inst, emb, true, &reason)) << reason;
  EXPECT_FALSE(verify_se(inst, emb, false));
}

TEST(SimplexEmbedding, StretchedEdgeFails) {
  SteinerInstance inst = gen_simplex_instance(2, 2);
  SimplexEmbedding emb = canonical_embedding(inst);
  VertexId v = *inst.graph.find_vertex(SimplexPoint{{1, 1, 1}});
  emb.y[static_cast<size_t>(v)] = {Rational(3), Rational(0), Rational(0)};
  std::string reason;
  EXPECT_FALSE(verify_se(inst, emb, true, &reason));
  EXPECT_NE(reason.find("stretched"), std::string::npos);
}

TEST(SimplexEmbedding, AllEqualEmbeddingHasZeroObjective) {
  SteinerInstance inst = gen_simplex_instance(3, 2);
  SimplexEmbedding emb;
  emb.size = Rational(2);
  emb.y.assign(static_cast<size_t>(inst.graph.num_vertices()), std::vector<Rational>(4, Rational(1, 2)));
  EXPECT_TRUE(verify_se(inst, emb, false));
  EXPECT_EQ(se_objective(inst, emb), Rational(0));
}

TEST(SimplexEmbedding, TerminalMapRequired) {
  SteinerInstance r = testing::random_instance(3, {4, 6, 3, 3, 1, 5});
  SimplexEmbedding emb = distance_embedding(r);
  emb.terminal_dims.clear();
  EXPECT_THROW(verify_se(r, emb, false), EmbeddingError);
  emb.terminal_dims = {0, 0, 1};
  EXPECT_THROW(se_objective(r, emb), EmbeddingError);
}

TEST(SimplexEmbedding, WeakDualityOnRandomInstances) {
  int positive = 0;
  for (uint32_t seed = 0; seed < 30; ++seed) {
    SteinerInstance inst = testing::random_instance(seed, {3, 8, 2, 4, 1, 9});
    SimplexEmbedding emb = distance_embedding(inst);
    std::string reason;
    ASSERT_TRUE(verify_se(inst, emb, false, &reason)) << inst.name << ": " << reason;
    Rational value = se_objective(inst, emb);
    if (value.sign() > 0) ++positive;
    Rational opt = lp_optimum(inst, false);
    EXPECT_LE(value, opt) << inst.name;
    EXPECT_LE(opt, lp_optimum(inst, true)) << inst.name;
  }
  EXPECT_EQ(positive, 30);
}

TEST(CkrEmbedding, IntegralLabelingGivesCutCost) {
  SteinerInstance inst = gen_multiway_dual(4, 2);
  MultiwayCutResult cut = exact_multiway_cut(inst);
  SimplexEmbedding x;
  x.size = Rational(1);
  for (int label : cut.labeling) {
    std::vector<Rational> point(3, Rational(0));
    point[static_cast<size_t>(corner_index(inst, inst.required[static_cast<size_t>(label)]))] = Rational(1);
    x.y.push_back(std::move(point));
  }
  EXPECT_EQ(ckr_objective(inst, x), cut.optimum);
}

TEST(CkrEmbedding, BarycentreInterior) {
  SteinerInstance inst = gen_multiway_dual(4, 2);
  SimplexEmbedding x = ckr_canonical_for_dual(inst, 4, 2);
  Rational expected;
  for (VertexId v = 0; v < inst.graph.num_vertices(); ++v) {
    if (!inst.is_required(v)) x.y[static_cast<size_t>(v)].assign(3, Rational(1, 3));
  }
  for (EdgeId e = 0; e < inst.graph.num_edges(); ++e) {
    const Edge& edge = inst.graph.edge(e);
    if (inst.is_required(edge.u) || inst.is_required(edge.v)) expected += inst.graph.cost(e) * Rational(2, 3);
  }
  EXPECT_EQ(ckr_objective(inst, x), expected);
}

TEST(CkrEmbedding, CanonicalEdgeTerms) {
  for (auto [s, delta] : {std::pair{9, 3}, {4, 2}, {7, 3}}) {
    SteinerInstance inst = gen_multiway_dual(s, delta);
    SimplexEmbedding x = ckr_canonical_for_dual(inst, s, delta);
    const Rational q(2 * s - 3 * delta + 1);
    const Rational level_two = Rational(1) / q;
    const Rational level_one = Rational(s - 2 * delta + 1) / q;
    for (EdgeId e = 0; e < inst.graph.num_edges(); ++e) {
      const Edge& edge = inst.graph.edge(e);
      Rational term;
      for (int i = 0; i < 3; ++i) {
        term += (x.y[static_cast<size_t>(edge.u)][static_cast<size_t>(i)] -
                 x.y[static_cast<size_t>(edge.v)][static_cast<size_t>(i)])
                    .abs();
      }
      term /= Rational(2);
      bool antenna = inst.is_required(edge.u) || inst.is_required(edge.v);
      EXPECT_EQ(term, antenna ? level_one : level_two) << "s=" << s << " edge " << e;
    }
  }
  EXPECT_EQ(level_profile(2, 9, 3).at(2), Rational(1, 10));
  EXPECT_EQ(level_profile(2, 9, 3).at(1), Rational(4, 10));
  EXPECT_EQ(level_profile(2, 4, 2).at(1), Rational(1, 3));
  EXPECT_EQ(level_profile(2, 4, 2).at(2), Rational(1, 3));
}

TEST(CkrEmbedding, CanonicalObjectiveMatchesPrimalCost) {
  EXPECT_EQ(ckr_objective(gen_multiway_dual(9, 3), ckr_canonical_for_dual(9, 3)), Rational(333, 10));
  for (auto [s, delta] : {std::pair{4, 2}, {5, 2}, {7, 3}, {9, 3}, {11, 4}, {13, 5}}) {
    SteinerInstance inst = gen_multiway_dual(s, delta);
    EXPECT_EQ(ckr_objective(inst, ckr_canonical_for_dual(inst, s, delta)), closed_form_cost(2, s, delta))
        << "s=" << s;
  }
}

TEST(CkrEmbedding, ObjectiveBoundedByExactCut) {
  for (auto [s, delta] : {std::pair{2, 1}, {3, 1}, {4, 2}, {5, 2}}) {
    SteinerInstance inst = gen_multiway_dual(s, delta);
    Rational value = ckr_objective(inst, ckr_canonical_for_dual(inst, s, delta));
    EXPECT_LE(value, exact_multiway_cut(inst).optimum) << "s=" << s;
  }
}

TEST(CkrEmbedding, RejectsBadEmbeddings) {
  SteinerInstance inst = gen_multiway_dual(4, 2);
  SimplexEmbedding x = ckr_canonical_for_dual(inst, 4, 2);
  SimplexEmbedding moved = x;
  moved.y[static_cast<size_t>(inst.required[0])] = {Rational(1, 2), Rational(1, 2), Rational(0)};
  EXPECT_THROW(ckr_objective(inst, moved), EmbeddingError);
  SimplexEmbedding off = x;
  off.y[0][0] += Rational(1);
  EXPECT_THROW(ckr_objective(inst, off), EmbeddingError);
  EXPECT_THROW(ckr_objective(gen_simplex_instance(3, 2), canonical_embedding(gen_simplex_instance(3, 2))),
               EmbeddingError);
}

TEST(CkrGapFormula, Examples) {
  EXPECT_EQ(ckr_gap_formula(3), Rational(16, 15));
  EXPECT_EQ(ckr_gap_formula(10), Rational(40, 37));
  Rational limit(12, 11);
  for (int q = 1000; q < 1003; ++q) EXPECT_LT((limit - ckr_gap_formula(q)).abs(), Rational(1, 1000));
  EXPECT_THROW(ckr_gap_formula(0), EmbeddingError);
}

TEST(CkrGapFormula, MatchesCanonicalRatio) {
  for (int s = 2; s <= 30; ++s) {
    for (int delta = 1; 2 * delta <= s; ++delta) {
      // Only the worst-case delta for each s is covered by the formula.
      int alpha = 3 * delta - s;
      if (alpha < 0 || alpha > 2) continue;
      int q = 2 * s - 3 * delta + 1;
      EXPECT_EQ(Rational(4 * s) / closed_form_cost(2, s, delta), ckr_gap_formula(q)) << "s=" << s;
    }
  }
  SteinerInstance inst = gen_multiway_dual(9, 3);
  EXPECT_EQ(Rational(36) / ckr_objective(inst, ckr_canonical_for_dual(inst, 9, 3)), ckr_gap_formula(10));
}

}  // namespace
}  // namespace steiner_gap
