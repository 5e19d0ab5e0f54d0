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

#include "steiner_gap/solutions.hpp"

#include <algorithm>
#include <type_traits>
#include <utility>

namespace steiner_gap {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

void check_size(const std::vector<Rational>& values, int expected, const std::string& what) {
  if (static_cast<int>(values.size()) != expected) {
    throw SolutionError(what + " has " + std::to_string(values.size()) + " entries, expected " +
                        std::to_string(expected));
  }
}

const ArcValues& flow_of(const std::map<VertexId, ArcValues>& flows, VertexId owner, const std::string& what) {
  auto it = flows.find(owner);
  if (it == flows.end()) throw SolutionError(what + " missing for vertex " + std::to_string(owner));
  return it->second;
}

void check_flow_keys(const std::map<VertexId, ArcValues>& flows, const std::vector<VertexId>& owners, int arcs,
                     const std::string& what) {
  if (flows.size() != owners.size()) throw SolutionError(what + " has the wrong number of commodities");
  for (VertexId s : owners) check_size(flow_of(flows, s, what), arcs, what);
}

std::vector<VertexId> without(const std::vector<VertexId>& items, VertexId drop) {
  std::vector<VertexId> out;
  for (VertexId v : items) {
    if (v != drop) out.push_back(v);
  }
  return out;
}

// Rejects solutions whose value vectors do not match the instance shape.
void check_shape(const SteinerInstance& inst, const FormulationSolution& sol, VertexId root) {
  const Graph& g = inst.graph;
  const int n = g.num_vertices();
  const int m = g.num_edges();
  const int arcs = g.num_arcs();
  std::visit(Overloaded{
                 [&](const BcrSolution& s) {
                   if (s.root != root) throw SolutionError("solution root differs from the formulation root");
                   check_size(s.u, m, "u");
                   check_size(s.f, arcs, "f");
                 },
                 [&](const McfrSolution& s) {
                   if (s.root != root) throw SolutionError("solution root differs from the formulation root");
                   check_size(s.u, m, "u");
                   check_size(s.f, arcs, "f");
                   check_flow_keys(s.g, without(inst.required, root), arcs, "g");
                 },
                 [&](const MbfrSolution& s) {
                   check_size(s.u, m, "u");
                   check_size(s.b, n, "b");
                   check_flow_keys(s.f, inst.required, arcs, "f");
                 },
                 [&](const MbcrSolution& s) {
                   check_size(s.u, m, "u");
                   check_size(s.b, n, "b");
                 },
                 [&](const SterSolution& s) {
                   check_size(s.u, m, "u");
                   check_size(s.y, n, "y");
                 },
             },
             sol);
}

ArcValues zero_arcs(const Graph& g) { return ArcValues(static_cast<size_t>(g.num_arcs()), Rational(0)); }

Rational net_out(const Graph& g, const ArcValues& f, VertexId v) {
  Rational total;
  for (ArcId a : g.out_arcs(v)) total += f[static_cast<size_t>(a)];
  for (ArcId a : g.in_arcs(v)) total -= f[static_cast<size_t>(a)];
  return total;
}

Rational incident_usage(const Graph& g, const EdgeValues& u, VertexId v) {
  Rational total;
  for (EdgeId e : g.incident(v)) total += u[static_cast<size_t>(e)];
  return total;
}

FormulationKind kind_for(BaseFormulation base, bool plus, VertexId root = -1) { return {base, plus, root}; }

void require_verified(const SteinerInstance& inst, const FormulationKind& kind, const FormulationSolution& sol) {
  std::string reason;
  if (!verify(inst, kind, sol, &reason)) {
    throw SolutionError(to_string(kind) + " input fails verification: " + reason);
  }
}

// Tree edges oriented away from `root`, as arc ids.
std::vector<ArcId> orient_from(const Graph& g, const std::vector<EdgeId>& tree, VertexId root) {
  std::vector<std::vector<EdgeId>> adjacent(static_cast<size_t>(g.num_vertices()));
  for (EdgeId e : tree) {
    adjacent[static_cast<size_t>(g.edge(e).u)].push_back(e);
    adjacent[static_cast<size_t>(g.edge(e).v)].push_back(e);
  }
  std::vector<ArcId> arcs;
  std::vector<bool> seen(static_cast<size_t>(g.num_vertices()), false);
  std::vector<VertexId> stack{root};
  seen[static_cast<size_t>(root)] = true;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (EdgeId e : adjacent[static_cast<size_t>(v)]) {
      VertexId w = g.other(e, v);
      if (seen[static_cast<size_t>(w)]) continue;
      seen[static_cast<size_t>(w)] = true;
      arcs.push_back(g.arc_between(v, w));
      stack.push_back(w);
    }
  }
  return arcs;
}

// Arcs of the tree path from `root` to `target`.
std::vector<ArcId> tree_path(const Graph& g, const std::vector<ArcId>& arborescence, VertexId target) {
  std::vector<ArcId> into(static_cast<size_t>(g.num_vertices()), -1);
  for (ArcId a : arborescence) into[static_cast<size_t>(g.arc(a).head)] = a;
  std::vector<ArcId> path;
  for (VertexId v = target; into[static_cast<size_t>(v)] >= 0; v = g.arc(into[static_cast<size_t>(v)]).tail) {
    path.push_back(into[static_cast<size_t>(v)]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

ArcValues indicator(const Graph& g, const std::vector<ArcId>& arcs) {
  ArcValues out = zero_arcs(g);
  for (ArcId a : arcs) out[static_cast<size_t>(a)] = Rational(1);
  return out;
}

}  // namespace

BaseFormulation base_of(const FormulationSolution& sol) {
  return std::visit(Overloaded{
                        [](const BcrSolution&) { return BaseFormulation::BCR; },
                        [](const McfrSolution&) { return BaseFormulation::MCFR; },
                        [](const MbfrSolution&) { return BaseFormulation::MBFR; },
                        [](const MbcrSolution&) { return BaseFormulation::MBCR; },
                        [](const SterSolution&) { return BaseFormulation::STER; },
                    },
                    sol);
}

const EdgeValues& edge_usage(const FormulationSolution& sol) {
  return std::visit([](const auto& s) -> const EdgeValues& { return s.u; }, sol);
}

Rational solution_objective(const SteinerInstance& inst, const FormulationSolution& sol) {
  const EdgeValues& u = edge_usage(sol);
  check_size(u, inst.num_edges(), "u");
  Rational total;
  for (EdgeId e = 0; e < inst.num_edges(); ++e) total += inst.graph.cost(e) * u[static_cast<size_t>(e)];
  return total;
}

std::vector<Rational> pack(const CompiledLp& compiled, const FormulationSolution& sol) {
  if (compiled.instance == nullptr) throw SolutionError("compiled LP has no instance");
  if (base_of(sol) != compiled.kind.base) {
    throw SolutionError("solution kind " + to_string(base_of(sol)) + " does not match " +
                        to_string(compiled.kind.base));
  }
  check_shape(*compiled.instance, sol, compiled.kind.root);
  std::vector<Rational> x;
  x.reserve(static_cast<size_t>(compiled.lp.num_variables()));
  for (const LpVariable& var : compiled.lp.variables()) {
    const VariableKey& key = var.key;
    const auto idx = static_cast<size_t>(key.index);
    const Rational* value = std::visit(
        Overloaded{
            [&](const BcrSolution& s) -> const Rational* {
              if (key.kind == VariableKind::EdgeUsage) return &s.u[idx];
              if (key.kind == VariableKind::RootFlow) return &s.f[idx];
              return nullptr;
            },
            [&](const McfrSolution& s) -> const Rational* {
              if (key.kind == VariableKind::EdgeUsage) return &s.u[idx];
              if (key.kind == VariableKind::RootFlow) return &s.f[idx];
              if (key.kind == VariableKind::CommodityFlow) return &flow_of(s.g, key.terminal, "g")[idx];
              return nullptr;
            },
            [&](const MbfrSolution& s) -> const Rational* {
              if (key.kind == VariableKind::EdgeUsage) return &s.u[idx];
              if (key.kind == VariableKind::Balance) return &s.b[idx];
              if (key.kind == VariableKind::CommodityFlow) return &flow_of(s.f, key.terminal, "f")[idx];
              return nullptr;
            },
            [&](const MbcrSolution& s) -> const Rational* {
              if (key.kind == VariableKind::EdgeUsage) return &s.u[idx];
              if (key.kind == VariableKind::Balance) return &s.b[idx];
              return nullptr;
            },
            [&](const SterSolution& s) -> const Rational* {
              if (key.kind == VariableKind::EdgeUsage) return &s.u[idx];
              if (key.kind == VariableKind::Inclusion) return &s.y[idx];
              return nullptr;
            },
        },
        sol);
    if (value == nullptr) throw SolutionError("no solution value for column " + var.name);
    x.push_back(*value);
  }
  return x;
}

FormulationSolution unpack(const CompiledLp& compiled, const std::vector<Rational>& values) {
  if (compiled.instance == nullptr) throw SolutionError("compiled LP has no instance");
  if (static_cast<int>(values.size()) != compiled.lp.num_variables()) {
    throw SolutionError("value vector does not match the compiled LP");
  }
  const SteinerInstance& inst = *compiled.instance;
  const Graph& g = inst.graph;
  const auto n = static_cast<size_t>(g.num_vertices());
  const auto m = static_cast<size_t>(g.num_edges());
  const auto arcs = static_cast<size_t>(g.num_arcs());
  EdgeValues u(m);
  ArcValues root_flow(arcs);
  VertexValues vertex_values(n);
  std::map<VertexId, ArcValues> flows;
  for (int c = 0; c < compiled.lp.num_variables(); ++c) {
    const VariableKey& key = compiled.lp.variable(c).key;
    const Rational& value = values[static_cast<size_t>(c)];
    const auto idx = static_cast<size_t>(key.index);
    switch (key.kind) {
      case VariableKind::EdgeUsage: u[idx] = value; break;
      case VariableKind::RootFlow: root_flow[idx] = value; break;
      case VariableKind::CommodityFlow: {
        ArcValues& f = flows[key.terminal];
        if (f.empty()) f.resize(arcs);
        f[idx] = value;
        break;
      }
      case VariableKind::Balance:
      case VariableKind::Inclusion: vertex_values[idx] = value; break;
      case VariableKind::Auxiliary: break;
    }
  }
  switch (compiled.kind.base) {
    case BaseFormulation::BCR: return BcrSolution{compiled.kind.root, std::move(u), std::move(root_flow)};
    case BaseFormulation::MCFR:
      return McfrSolution{compiled.kind.root, std::move(u), std::move(root_flow), std::move(flows)};
    case BaseFormulation::MBFR: return MbfrSolution{std::move(u), std::move(vertex_values), std::move(flows)};
    case BaseFormulation::MBCR: return MbcrSolution{std::move(u), std::move(vertex_values)};
    case BaseFormulation::STER: return SterSolution{std::move(u), std::move(vertex_values)};
  }
  throw SolutionError("unknown formulation");
}

bool verify(const SteinerInstance& inst, const FormulationKind& kind, const FormulationSolution& sol,
            std::string* reason) {
  if (base_of(sol) != kind.base) {
    throw SolutionError("solution kind " + to_string(base_of(sol)) + " does not match " + to_string(kind.base));
  }
  CompiledLp compiled = compile(inst, kind);
  std::vector<Rational> x = pack(compiled, sol);
  auto fail = [&](const std::string& why) {
    if (reason != nullptr) *reason = why;
    return false;
  };
  for (int c = 0; c < compiled.lp.num_variables(); ++c) {
    const LpVariable& var = compiled.lp.variable(c);
    const Rational& value = x[static_cast<size_t>(c)];
    if (var.lower && value < *var.lower) return fail("lower bound of " + var.name);
    if (var.upper && value > *var.upper) return fail("upper bound of " + var.name);
  }
  for (int r = 0; r < compiled.lp.num_constraints(); ++r) {
    const LpConstraint& row = compiled.lp.constraint(r);
    Rational activity = compiled.lp.row_activity(r, x);
    bool ok = row.sense == Sense::Equal       ? activity == row.rhs
              : row.sense == Sense::LessEqual ? activity <= row.rhs
                                              : activity >= row.rhs;
    if (!ok) return fail("row " + row.name + " has activity " + activity.to_string() + " against " + row.rhs.to_string());
  }
  if (reason != nullptr) reason->clear();
  return true;
}

MbfrSolution translate_mcfr_to_mbfr(const SteinerInstance& inst, const McfrSolution& sol, bool plus) {
  require_verified(inst, kind_for(BaseFormulation::MCFR, plus, sol.root), sol);
  const Graph& g = inst.graph;
  MbfrSolution out;
  out.u = sol.u;
  out.b.resize(static_cast<size_t>(g.num_vertices()));
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out.b[static_cast<size_t>(v)] = net_out(g, sol.f, v) - Rational(v == sol.root ? 2 : 0);
  }
  out.f[sol.root] = sol.f;
  for (const auto& [s, gs] : sol.g) {
    ArcValues fs = zero_arcs(g);
    for (ArcId a = 0; a < g.num_arcs(); ++a) {
      const auto i = static_cast<size_t>(a);
      fs[i] = sol.f[i] - gs[i] + gs[static_cast<size_t>(Graph::reverse(a))];
    }
    out.f[s] = std::move(fs);
  }
  return out;
}

McfrSolution translate_mbfr_to_mcfr(const SteinerInstance& inst, const MbfrSolution& sol, bool plus, VertexId root) {
  require_verified(inst, kind_for(BaseFormulation::MBFR, plus), sol);
  if (root < 0) root = inst.default_root();
  if (!inst.is_required(root)) throw SolutionError("root must be a required vertex");
  const Graph& g = inst.graph;
  const ArcValues& fr = flow_of(sol.f, root, "f");
  McfrSolution out;
  out.root = root;
  out.u = sol.u;
  out.f = zero_arcs(g);
  const Rational half(1, 2);
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    const auto i = static_cast<size_t>(a);
    const auto rev = static_cast<size_t>(Graph::reverse(a));
    out.f[i] = half * (fr[i] - fr[rev] + sol.u[static_cast<size_t>(Graph::arc_edge(a))]);
  }
  for (VertexId s : inst.required) {
    if (s == root) continue;
    const ArcValues& fs = flow_of(sol.f, s, "f");
    ArcValues gs = zero_arcs(g);
    for (ArcId a = 0; a < g.num_arcs(); ++a) {
      const auto i = static_cast<size_t>(a);
      const auto rev = static_cast<size_t>(Graph::reverse(a));
      gs[i] = half * max(fr[i] - fr[rev] + fs[rev] - fs[i], Rational(0));
    }
    out.g[s] = std::move(gs);
  }
  return out;
}

MbfrSolution translate_mbcr_to_mbfr(const SteinerInstance& inst, const MbcrSolution& sol, bool plus) {
  if (inst.num_vertices() <= kExplicitVertexLimit) {
    require_verified(inst, kind_for(BaseFormulation::MBCR, plus), sol);
  } else {
    check_shape(inst, sol, -1);
  }
  const Graph& g = inst.graph;
  MbfrSolution out;
  out.u = sol.u;
  out.b = sol.b;
  for (VertexId r : inst.required) {
    VertexValues br = sol.b;
    br[static_cast<size_t>(r)] += Rational(2);
    BalanceFlowResult flow = construct_bidirected_balance_flow(g, sol.u, br);
    if (!flow.feasible) {
      throw SolutionError("balance flow for vertex " + std::to_string(r) + " does not exist; cut condition fails");
    }
    out.f[r] = std::move(flow.flow);
  }
  return out;
}

MbcrSolution translate_mbfr_to_mbcr(const SteinerInstance& inst, const MbfrSolution& sol, bool plus) {
  require_verified(inst, kind_for(BaseFormulation::MBFR, plus), sol);
  return MbcrSolution{sol.u, sol.b};
}

SterSolution translate_mbcr_to_ster(const SteinerInstance& inst, const MbcrSolution& sol, bool plus) {
  require_verified(inst, kind_for(BaseFormulation::MBCR, plus), sol);
  const Graph& g = inst.graph;
  SterSolution out;
  out.u = sol.u;
  out.y.resize(static_cast<size_t>(g.num_vertices()));
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out.y[static_cast<size_t>(v)] = (incident_usage(g, sol.u, v) - sol.b[static_cast<size_t>(v)]) / Rational(2);
  }
  return out;
}

MbcrSolution translate_ster_to_mbcr(const SteinerInstance& inst, const SterSolution& sol, bool plus) {
  require_verified(inst, kind_for(BaseFormulation::STER, plus), sol);
  const Graph& g = inst.graph;
  MbcrSolution out;
  out.u = sol.u;
  out.b.resize(static_cast<size_t>(g.num_vertices()));
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    out.b[static_cast<size_t>(v)] = incident_usage(g, sol.u, v) - Rational(2) * sol.y[static_cast<size_t>(v)];
  }
  return out;
}

FormulationSolution steiner_tree_to_solution(const SteinerInstance& inst, const TreeSolution& tree,
                                             const FormulationKind& kind) {
  std::string defect = check_steiner_tree(inst, tree, true);
  if (!defect.empty()) throw SolutionError("not a Steiner tree: " + defect);
  const Graph& g = inst.graph;
  const auto n = static_cast<size_t>(g.num_vertices());
  EdgeValues u(static_cast<size_t>(g.num_edges()), Rational(0));
  std::vector<int> degree(n, 0);
  for (EdgeId e : tree.edges) {
    u[static_cast<size_t>(e)] = Rational(1);
    ++degree[static_cast<size_t>(g.edge(e).u)];
    ++degree[static_cast<size_t>(g.edge(e).v)];
  }
  // A single required vertex yields an empty tree that still contains it.
  std::vector<bool> in_tree(n, false);
  for (VertexId v = 0; v < g.num_vertices(); ++v) in_tree[static_cast<size_t>(v)] = degree[static_cast<size_t>(v)] > 0;
  for (VertexId r : inst.required) in_tree[static_cast<size_t>(r)] = true;

  auto balances = [&]() {
    VertexValues b(n, Rational(0));
    for (size_t v = 0; v < n; ++v) {
      if (in_tree[v]) b[v] = Rational(degree[v] - 2);
    }
    return b;
  };

  switch (kind.base) {
    case BaseFormulation::BCR:
    case BaseFormulation::MCFR: {
      VertexId root = kind.root < 0 ? inst.default_root() : kind.root;
      if (!inst.is_required(root)) throw SolutionError("root must be a required vertex");
      std::vector<ArcId> arborescence = orient_from(g, tree.edges, root);
      if (kind.base == BaseFormulation::BCR) return BcrSolution{root, u, indicator(g, arborescence)};
      McfrSolution out{root, u, indicator(g, arborescence), {}};
      for (VertexId s : inst.required) {
        if (s != root) out.g[s] = indicator(g, tree_path(g, arborescence, s));
      }
      return out;
    }
    case BaseFormulation::MBFR: {
      MbfrSolution out{u, balances(), {}};
      for (VertexId r : inst.required) out.f[r] = indicator(g, orient_from(g, tree.edges, r));
      return out;
    }
    case BaseFormulation::MBCR: return MbcrSolution{u, balances()};
    case BaseFormulation::STER: {
      VertexValues y(n, Rational(0));
      for (size_t v = 0; v < n; ++v) {
        if (in_tree[v]) y[v] = Rational(1);
      }
      return SterSolution{u, y};
    }
  }
  throw SolutionError("unknown formulation");
}

McfrSolution normalize_mcfr(const SteinerInstance& inst, const McfrSolution& sol) {
  check_shape(inst, sol, sol.root);
  const Graph& g = inst.graph;
  McfrSolution out = sol;
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    Rational top;
    for (const auto& [s, gs] : sol.g) top = max(top, gs[static_cast<size_t>(a)]);
    out.f[static_cast<size_t>(a)] = top;
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    out.u[static_cast<size_t>(e)] = out.f[static_cast<size_t>(2 * e)] + out.f[static_cast<size_t>(2 * e + 1)];
  }
  return out;
}

}  // namespace steiner_gap
