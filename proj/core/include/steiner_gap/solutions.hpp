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

#ifndef STEINER_GAP_SOLUTIONS_HPP_
#define STEINER_GAP_SOLUTIONS_HPP_

#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "steiner_gap/formulations.hpp"
#include "steiner_gap/graph.hpp"
#include "steiner_gap/graph_algorithms.hpp"
#include "steiner_gap/lp.hpp"
#include "steiner_gap/rational.hpp"

namespace steiner_gap {

// Per-edge, per-arc and per-vertex value vectors indexed by id.
using EdgeValues = std::vector<Rational>;
using ArcValues = std::vector<Rational>;
using VertexValues = std::vector<Rational>;

struct BcrSolution {
  VertexId root = -1;
  EdgeValues u;
  ArcValues f;  // root flow
};

struct McfrSolution {
  VertexId root = -1;
  EdgeValues u;
  ArcValues f;                       // root flow
  std::map<VertexId, ArcValues> g;   // one commodity per non-root required vertex
};

struct MbfrSolution {
  EdgeValues u;
  VertexValues b;
  std::map<VertexId, ArcValues> f;  // one flow per required vertex
};

struct MbcrSolution {
  EdgeValues u;
  VertexValues b;
};

struct SterSolution {
  EdgeValues u;
  VertexValues y;
};

using FormulationSolution =
    std::variant<BcrSolution, McfrSolution, MbfrSolution, MbcrSolution, SterSolution>;

class SolutionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BaseFormulation base_of(const FormulationSolution& sol);
const EdgeValues& edge_usage(const FormulationSolution& sol);
Rational solution_objective(const SteinerInstance& inst, const FormulationSolution& sol);

// Column vector of `sol` in the layout of `compiled`. Throws SolutionError
// when the value vectors do not match the instance.
std::vector<Rational> pack(const CompiledLp& compiled, const FormulationSolution& sol);
// Inverse of pack for a column vector such as LpOutcome::values.
FormulationSolution unpack(const CompiledLp& compiled, const std::vector<Rational>& values);

// Exact check of every row and bound of the compiled formulation for `kind`.
// `reason` receives the first violated row or bound.
bool verify(const SteinerInstance& inst, const FormulationKind& kind, const FormulationSolution& sol,
            std::string* reason = nullptr);

// Translations preserve u exactly. `plus` selects the Steiner-vertex degree
// variants on both sides. Inputs that fail verification throw SolutionError.
MbfrSolution translate_mcfr_to_mbfr(const SteinerInstance& inst, const McfrSolution& sol, bool plus = false);
McfrSolution translate_mbfr_to_mcfr(const SteinerInstance& inst, const MbfrSolution& sol, bool plus = false,
                                    VertexId root = -1);
MbfrSolution translate_mbcr_to_mbfr(const SteinerInstance& inst, const MbcrSolution& sol, bool plus = false);
MbcrSolution translate_mbfr_to_mbcr(const SteinerInstance& inst, const MbfrSolution& sol, bool plus = false);
SterSolution translate_mbcr_to_ster(const SteinerInstance& inst, const MbcrSolution& sol, bool plus = false);
MbcrSolution translate_ster_to_mbcr(const SteinerInstance& inst, const SterSolution& sol, bool plus = false);

// Either a flow with f(v,w) + f(w,v) <= u({v,w}) and net outflow b(v) at
// every vertex, or a vertex set X with u(delta(X)) < b(X).
struct BalanceFlowResult {
  bool feasible = false;
  ArcValues flow;                // per arc when feasible
  std::vector<VertexId> witness;  // sorted, when infeasible
};

// Throws SolutionError unless b sums to zero.
BalanceFlowResult construct_bidirected_balance_flow(const Graph& g, const EdgeValues& u, const VertexValues& b);

// Empty when f is nonnegative, f(v,w) + f(w,v) <= u({v,w}) and the net
// outflow at every vertex equals b; otherwise the first defect found.
std::string check_balance_flow(const Graph& g, const EdgeValues& u, const VertexValues& b, const ArcValues& f);

// Canonical integral solution of a Steiner tree for the given kind.
FormulationSolution steiner_tree_to_solution(const SteinerInstance& inst, const TreeSolution& tree,
                                             const FormulationKind& kind);

// Sets f to the pointwise maximum of the commodities and u to the sum of
// both orientations of f.
McfrSolution normalize_mcfr(const SteinerInstance& inst, const McfrSolution& sol);

struct WeightedTree {
  Rational lambda;
  TreeSolution tree;
};

struct ConvexDecomposition {
  std::vector<WeightedTree> trees;
  // Potential before each extraction step.
  std::vector<int> potentials;
  // True when the weights sum to one and reproduce the normalized u exactly.
  bool exact = false;
  // Set when the extraction stopped at a step size above one or left a
  // nonzero remainder.
  std::string flag;
};

class DecompositionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Splits a three-terminal MCFR-plus solution into a convex combination of
// Steiner trees by repeated star extraction. The input is normalized first.
ConvexDecomposition decompose_three_terminal(const SteinerInstance& inst, const McfrSolution& sol);

}  // namespace steiner_gap

#endif  // STEINER_GAP_SOLUTIONS_HPP_
