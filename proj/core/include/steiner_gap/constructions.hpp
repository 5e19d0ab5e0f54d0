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

#ifndef STEINER_GAP_CONSTRUCTIONS_HPP_
#define STEINER_GAP_CONSTRUCTIONS_HPP_

#include <stdexcept>
#include <vector>

#include "steiner_gap/graph.hpp"
#include "steiner_gap/instances.hpp"
#include "steiner_gap/rational.hpp"
#include "steiner_gap/solutions.hpp"

namespace steiner_gap {

class ConstructionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Fractional MCFR solution on the Goemans instance: u = 1/d on every edge and
// 1/d of each commodity along d edge-disjoint root paths.
McfrSolution goemans_fractional(int d);
McfrSolution goemans_fractional(const SteinerInstance& goemans);

// Flow on a path v_0 ... v_p (vertex ids 0..p): f(v_i, v_{i+1}) = i * gamma
// and f(v_{i+1}, v_i) = (p - 1 - i) * gamma. Balances -(p-1) gamma at both
// ends and 2 gamma inside.
struct LineFlow {
  Graph graph;
  ArcValues flow;
  VertexValues balance;
};
LineFlow path_flow(int p, const Rational& gamma);

// Membership classes of the two-dimensional matching gadget.
enum class GadgetClass { A1, A2, A3, B1, B2, B3 };

// Class of a point with three coordinates, relative to the threshold delta.
// Throws ConstructionError for points in no class.
GadgetClass gadget_class(int x0, int x1, int x2, int delta);

// The level-two gadget for s = 3 delta - 2: layer-s points with coordinates
// at most s - delta and layer-(s+1) points with coordinates in
// [1, s - delta + 1]. Flow gamma along one matched edge per layer-s vertex.
struct GadgetFlow {
  Graph graph;  // SimplexPoint labels
  ArcValues flow;
  VertexValues balance;
  std::vector<GadgetClass> classes;
};
GadgetFlow matching_flow(int s, int delta, const Rational& gamma);

// Edge usage per level: u'(l) for l = 1..d; zero from level 3 on.
struct LevelProfile {
  int d = 0;
  std::vector<Rational> usage;  // index l; usage[0] unused

  // u'(l), zero outside 1..d.
  Rational at(int l) const;
};

// Vertex balances per level for the size-s layer (b0) and the size-(s+1)
// layer (b1).
struct BalanceProfile {
  std::vector<Rational> b0;  // index l = 0..d
  std::vector<Rational> b1;
};

// Throws ConstructionError unless d = 2 and 1 <= delta, 2 delta <= s, or
// d >= 3 and s = 3 delta - 2 with delta >= 2.
void check_construction_params(int d, int s, int delta);
LevelProfile level_profile(int d, int s, int delta);
BalanceProfile balance_profile(const LevelProfile& profile);

// Flow for corner k (0-based) on the split simplified graph, with usage
// u'(level(e)) on every edge and the balances b_k of the construction.
struct SplitFlow {
  SplitGraph split;
  LevelProfile profile;
  EdgeValues usage;
  VertexValues balance;
  ArcValues flow;
};
SplitFlow simplified_simplex_flow(int d, int s, int delta, int k);

// MBFR solution on gen_simplified_simplex_instance(d, s, delta) obtained by
// contracting the split flows of every corner.
MbfrSolution simplified_simplex_solution(const SteinerInstance& simplified, int d, int s, int delta);

// Cost s (d + 1) + 3/2 (s - delta)(s - delta + 1) / (2 s - 3 delta + 1) (d - 1)
// of the constructed solution.
Rational closed_form_cost(int d, int s, int delta);
// Two-dimensional cost for s = 3 delta - alpha by the three-case
// simplification.
Rational closed_form_cost_dual_cases(int s, int alpha);

// 6 d / (5 d + 1 + (d - 1) / s) for s = 3 delta - 2, delta >= 2.
Rational gap_lower_bound(int d, int s);
// 6 (k - 1) / (5 (k - 1) + 1) for k >= 2 required vertices.
Rational gap_limit(int k);

}  // namespace steiner_gap

#endif  // STEINER_GAP_CONSTRUCTIONS_HPP_
