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

#include <algorithm>
#include <deque>
#include <optional>
#include <set>

#include "steiner_gap/solutions.hpp"

namespace steiner_gap {

namespace {

struct Commodities {
  ArcValues first;
  ArcValues second;
  ArcValues common;  // pointwise minimum of both
};

Commodities split(const Graph& g, const ArcValues& first, const ArcValues& second) {
  Commodities c{first, second, ArcValues(static_cast<size_t>(g.num_arcs()))};
  for (size_t a = 0; a < c.common.size(); ++a) c.common[a] = min(first[a], second[a]);
  return c;
}

Rational inflow(const Graph& g, const ArcValues& f, VertexId v) {
  Rational total;
  for (ArcId a : g.in_arcs(v)) total += f[static_cast<size_t>(a)];
  return total;
}

Rational outflow(const Graph& g, const ArcValues& f, VertexId v) {
  Rational total;
  for (ArcId a : g.out_arcs(v)) total += f[static_cast<size_t>(a)];
  return total;
}

// Vertices other than the root where common flow is absorbed.
std::vector<VertexId> branching_candidates(const Graph& g, const Commodities& c, VertexId root) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (v != root && inflow(g, c.common, v) > outflow(g, c.common, v)) out.push_back(v);
  }
  return out;
}

int potential(const Graph& g, const Commodities& c, VertexId root) {
  int phi = static_cast<int>(branching_candidates(g, c, root).size());
  for (size_t a = 0; a < c.common.size(); ++a) {
    if (c.common[a].sign() > 0) ++phi;
    if (c.first[a] > c.common[a]) ++phi;
    if (c.second[a] > c.common[a]) ++phi;
  }
  return phi;
}

// Breadth-first path over arcs accepted by `usable`, scanning heads in
// increasing vertex order. Empty when target == source.
template <class ArcPredicate>
std::vector<ArcId> bfs_path(const Graph& g, VertexId source, VertexId target, ArcPredicate usable) {
  std::vector<ArcId> via(static_cast<size_t>(g.num_vertices()), -1);
  std::vector<bool> seen(static_cast<size_t>(g.num_vertices()), false);
  seen[static_cast<size_t>(source)] = true;
  std::deque<VertexId> queue{source};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    std::vector<ArcId> out = g.out_arcs(v);
    std::sort(out.begin(), out.end(), [&](ArcId x, ArcId y) { return g.arc(x).head < g.arc(y).head; });
    for (ArcId a : out) {
      VertexId w = g.arc(a).head;
      if (seen[static_cast<size_t>(w)] || !usable(a)) continue;
      seen[static_cast<size_t>(w)] = true;
      via[static_cast<size_t>(w)] = a;
      queue.push_back(w);
    }
  }
  if (!seen[static_cast<size_t>(target)]) throw DecompositionError("no extraction path to vertex " + std::to_string(target));
  std::vector<ArcId> path;
  for (VertexId v = target; v != source; v = g.arc(via[static_cast<size_t>(v)]).tail) path.push_back(via[static_cast<size_t>(v)]);
  std::reverse(path.begin(), path.end());
  return path;
}

// Undirected edge set of the union of the arc paths; throws unless it forms
// a tree with one edge per arc.
TreeSolution undirected_tree(const SteinerInstance& inst, const std::vector<std::vector<ArcId>>& paths) {
  std::set<EdgeId> edges;
  size_t arcs = 0;
  for (const auto& p : paths) {
    arcs += p.size();
    for (ArcId a : p) edges.insert(Graph::arc_edge(a));
  }
  if (edges.size() != arcs) throw DecompositionError("extraction paths overlap");
  TreeSolution tree;
  tree.edges.assign(edges.begin(), edges.end());
  tree.cost = edge_set_cost(inst.graph, tree.edges);
  std::string defect = check_steiner_tree(inst, tree, false);
  if (!defect.empty()) throw DecompositionError("extracted subgraph is not a Steiner tree: " + defect);
  return tree;
}

void subtract_scaled(ArcValues& f, const std::vector<ArcId>& arcs, const Rational& step, const Rational& keep) {
  for (ArcId a : arcs) f[static_cast<size_t>(a)] -= step;
  for (Rational& x : f) x /= keep;
}

bool all_zero(const ArcValues& f) {
  return std::all_of(f.begin(), f.end(), [](const Rational& x) { return x.is_zero(); });
}

}  // namespace

ConvexDecomposition decompose_three_terminal(const SteinerInstance& inst, const McfrSolution& sol) {
  if (inst.required.size() != 3) throw DecompositionError("decomposition needs exactly three required vertices");
  McfrSolution normalized = normalize_mcfr(inst, sol);
  std::string reason;
  if (!verify(inst, FormulationKind{BaseFormulation::MCFR, true, sol.root}, normalized, &reason)) {
    throw DecompositionError("normalized solution is not MCFR-plus feasible: " + reason);
  }
  const Graph& g = inst.graph;
  const VertexId root = sol.root;
  std::vector<VertexId> sinks;
  for (VertexId s : inst.required) {
    if (s != root) sinks.push_back(s);
  }
  Commodities c = split(g, normalized.g.at(sinks[0]), normalized.g.at(sinks[1]));

  ConvexDecomposition out;
  Rational remaining(1);
  for (;;) {
    int phi = potential(g, c, root);
    if (!out.potentials.empty() && phi >= out.potentials.back()) {
      throw DecompositionError("potential did not decrease");
    }
    out.potentials.push_back(phi);

    std::vector<VertexId> candidates = branching_candidates(g, c, root);
    VertexId center = candidates.empty() ? root : candidates.front();
    std::vector<ArcId> trunk;
    if (center != root) {
      trunk = bfs_path(g, root, center, [&](ArcId a) { return c.common[static_cast<size_t>(a)].sign() > 0; });
    }
    std::vector<ArcId> branch1 = bfs_path(g, center, sinks[0], [&](ArcId a) {
      return c.first[static_cast<size_t>(a)] > c.common[static_cast<size_t>(a)];
    });
    std::vector<ArcId> branch2 = bfs_path(g, center, sinks[1], [&](ArcId a) {
      return c.second[static_cast<size_t>(a)] > c.common[static_cast<size_t>(a)];
    });
    TreeSolution tree = undirected_tree(inst, {trunk, branch1, branch2});

    std::optional<Rational> step;
    auto lower_to = [&](const Rational& x) {
      if (!step || x < *step) step = x;
    };
    auto excess = [&](const ArcValues& gi, const std::vector<ArcId>& branch) {
      for (ArcId a : branch) lower_to(gi[static_cast<size_t>(a)] - c.common[static_cast<size_t>(a)]);
    };
    excess(c.first, branch1);
    excess(c.second, branch2);
    if (center != root) {
      lower_to(inflow(g, c.common, center) - outflow(g, c.common, center));
      for (ArcId a : trunk) lower_to(c.common[static_cast<size_t>(a)]);
    }

    if (*step >= Rational(1)) {
      out.trees.push_back({remaining, tree});
      std::vector<ArcId> path1 = trunk;
      path1.insert(path1.end(), branch1.begin(), branch1.end());
      std::vector<ArcId> path2 = trunk;
      path2.insert(path2.end(), branch2.begin(), branch2.end());
      subtract_scaled(c.first, path1, Rational(1), Rational(1));
      subtract_scaled(c.second, path2, Rational(1), Rational(1));
      if (*step > Rational(1)) {
        out.flag = "step size " + step->to_string() + " exceeds one";
      } else if (!all_zero(c.first) || !all_zero(c.second)) {
        out.flag = "nonzero remainder after the final extraction";
      }
      break;
    }

    out.trees.push_back({remaining * *step, tree});
    const Rational keep = Rational(1) - *step;
    std::vector<ArcId> path1 = trunk;
    path1.insert(path1.end(), branch1.begin(), branch1.end());
    std::vector<ArcId> path2 = trunk;
    path2.insert(path2.end(), branch2.begin(), branch2.end());
    subtract_scaled(c.first, path1, *step, keep);
    subtract_scaled(c.second, path2, *step, keep);
    c = split(g, c.first, c.second);
    remaining *= keep;
  }

  Rational total;
  EdgeValues usage(static_cast<size_t>(g.num_edges()), Rational(0));
  for (const WeightedTree& wt : out.trees) {
    total += wt.lambda;
    for (EdgeId e : wt.tree.edges) usage[static_cast<size_t>(e)] += wt.lambda;
  }
  out.exact = out.flag.empty() && total == Rational(1) && usage == normalized.u;
  return out;
}

}  // namespace steiner_gap
