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

#include "steiner_gap/formulations.hpp"

#include <algorithm>
#include <functional>

namespace steiner_gap {

std::string to_string(BaseFormulation base) {
  switch (base) {
    case BaseFormulation::BCR: return "BCR";
    case BaseFormulation::MCFR: return "MCFR";
    case BaseFormulation::MBFR: return "MBFR";
    case BaseFormulation::MBCR: return "MBCR";
    case BaseFormulation::STER: return "STER";
  }
  return "?";
}

BaseFormulation parse_base_formulation(const std::string& text) {
  std::string upper;
  for (char c : text) upper.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  for (auto b : {BaseFormulation::BCR, BaseFormulation::MCFR, BaseFormulation::MBFR,
                 BaseFormulation::MBCR, BaseFormulation::STER}) {
    if (to_string(b) == upper) return b;
  }
  throw FormulationError("unknown formulation '" + text + "'");
}

bool uses_root(BaseFormulation base) {
  return base == BaseFormulation::BCR || base == BaseFormulation::MCFR;
}

bool is_explicit_cut(BaseFormulation base) {
  return base == BaseFormulation::BCR || base == BaseFormulation::MBCR ||
         base == BaseFormulation::STER;
}

std::string to_string(const FormulationKind& kind) {
  return to_string(kind.base) + (kind.plus ? "+" : "");
}

std::string variable_name(const Graph& g, BaseFormulation base, const VariableKey& key) {
  auto arc_text = [&](int a) {
    DirectedEdge d = g.arc(a);
    return std::to_string(d.tail) + ">" + std::to_string(d.head);
  };
  switch (key.kind) {
    case VariableKind::EdgeUsage: {
      const Edge& e = g.edge(key.index);
      return "u(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
    }
    case VariableKind::RootFlow: return "f(" + arc_text(key.index) + ")";
    case VariableKind::CommodityFlow:
      return std::string(base == BaseFormulation::MBFR ? "f(" : "g(") + std::to_string(key.terminal) + ":" +
             arc_text(key.index) + ")";
    case VariableKind::Balance: return "b(" + std::to_string(key.index) + ")";
    case VariableKind::Inclusion: return "y(" + std::to_string(key.index) + ")";
    case VariableKind::Auxiliary: return "z(" + std::to_string(key.index) + ")";
  }
  return "?";
}

namespace {

class Builder {
 public:
  Builder(const SteinerInstance& inst, FormulationKind kind) : inst_(inst), g_(inst.graph) {
    out_.kind = kind;
    out_.instance = &inst;
  }

  int add(const VariableKey& key, std::optional<Rational> lower, std::optional<Rational> upper = std::nullopt) {
    return out_.lp.add_variable(key, std::move(lower), std::move(upper), variable_name(g_, out_.kind.base, key));
  }

  void add_usage_columns() {
    for (EdgeId e = 0; e < g_.num_edges(); ++e) {
      int c = add(VariableKey::edge_usage(e), Rational(0));
      out_.lp.set_objective(c, g_.cost(e));
    }
  }

  int col(const VariableKey& key) const { return out_.lp.column(key); }

  void row(std::vector<Term> terms, Sense sense, const Rational& rhs, const std::string& name) {
    out_.lp.add_constraint(std::move(terms), sense, rhs, name);
  }

  CompiledLp finish() { return std::move(out_); }

  const SteinerInstance& inst_;
  const Graph& g_;
  CompiledLp out_;
};

VertexId resolve_root(const SteinerInstance& inst, VertexId root) {
  if (root < 0) return inst.default_root();
  if (!inst.is_required(root)) throw FormulationError("root must be a required vertex");
  return root;
}

void check_explicit_size(const SteinerInstance& inst) {
  if (inst.num_vertices() > kExplicitVertexLimit) {
    throw VertexLimitExceeded("explicit cut formulation needs |V| <= " + std::to_string(kExplicitVertexLimit) +
                              ", got " + std::to_string(inst.num_vertices()));
  }
}

// f(v,w) + f(w,v) - u(e) <= 0 for the flow family selected by `key_of`.
void add_capacity_rows(Builder& b, const std::function<VariableKey(ArcId)>& key_of, const std::string& tag) {
  for (EdgeId e = 0; e < b.g_.num_edges(); ++e) {
    b.row({{b.col(key_of(2 * e)), Rational(1)},
           {b.col(key_of(2 * e + 1)), Rational(1)},
           {b.col(VariableKey::edge_usage(e)), Rational(-1)}},
          Sense::LessEqual, Rational(0), "cap" + tag + "_" + std::to_string(e));
  }
}

// sum over arcs out of v minus sum over arcs into v.
std::vector<Term> net_out(const Builder& b, VertexId v, const std::function<VariableKey(ArcId)>& key_of) {
  std::vector<Term> terms;
  for (ArcId a : b.g_.out_arcs(v)) terms.push_back({b.col(key_of(a)), Rational(1)});
  for (ArcId a : b.g_.in_arcs(v)) terms.push_back({b.col(key_of(a)), Rational(-1)});
  return terms;
}

void add_flow_balance_rows(Builder& b) {
  auto key = [](ArcId a) { return VariableKey::root_flow(a); };
  for (VertexId v = 0; v < b.g_.num_vertices(); ++v) {
    if (b.inst_.is_required(v)) continue;
    b.row(net_out(b, v, key), Sense::GreaterEqual, Rational(0), "plus_" + std::to_string(v));
  }
}

std::vector<bool> mask_members(uint32_t mask, int n) {
  std::vector<bool> in(static_cast<size_t>(n));
  for (int v = 0; v < n; ++v) in[static_cast<size_t>(v)] = (mask >> v) & 1u;
  return in;
}

// u(delta(X)) terms.
std::vector<Term> cut_usage(const Builder& b, const std::vector<bool>& in) {
  std::vector<Term> terms;
  for (EdgeId e = 0; e < b.g_.num_edges(); ++e) {
    const Edge& ed = b.g_.edge(e);
    if (in[static_cast<size_t>(ed.u)] != in[static_cast<size_t>(ed.v)]) {
      terms.push_back({b.col(VariableKey::edge_usage(e)), Rational(1)});
    }
  }
  return terms;
}

// u(E[X]) terms.
std::vector<Term> inner_usage(const Builder& b, const std::vector<bool>& in) {
  std::vector<Term> terms;
  for (EdgeId e = 0; e < b.g_.num_edges(); ++e) {
    const Edge& ed = b.g_.edge(e);
    if (in[static_cast<size_t>(ed.u)] && in[static_cast<size_t>(ed.v)]) {
      terms.push_back({b.col(VariableKey::edge_usage(e)), Rational(1)});
    }
  }
  return terms;
}

bool meets_required(const SteinerInstance& inst, const std::vector<bool>& in) {
  for (VertexId r : inst.required) {
    if (in[static_cast<size_t>(r)]) return true;
  }
  return false;
}

std::string set_name(const std::string& prefix, uint32_t mask) { return prefix + "_" + std::to_string(mask); }

}  // namespace

CompiledLp compile_mcfr(const SteinerInstance& inst, VertexId root, bool plus) {
  root = resolve_root(inst, root);
  Builder b(inst, FormulationKind{BaseFormulation::MCFR, plus, root});
  const Graph& g = inst.graph;
  b.add_usage_columns();
  for (ArcId a = 0; a < g.num_arcs(); ++a) b.add(VariableKey::root_flow(a), Rational(0));
  std::vector<VertexId> sinks;
  for (VertexId s : inst.required) {
    if (s != root) sinks.push_back(s);
  }
  for (VertexId s : sinks) {
    for (ArcId a = 0; a < g.num_arcs(); ++a) b.add(VariableKey::commodity_flow(s, a), Rational(0));
  }
  add_capacity_rows(b, [](ArcId a) { return VariableKey::root_flow(a); }, "");
  for (VertexId s : sinks) {
    for (ArcId a = 0; a < g.num_arcs(); ++a) {
      b.row({{b.col(VariableKey::commodity_flow(s, a)), Rational(1)}, {b.col(VariableKey::root_flow(a)), Rational(-1)}},
            Sense::LessEqual, Rational(0), "dom_" + std::to_string(s) + "_" + std::to_string(a));
    }
    auto key = [s](ArcId a) { return VariableKey::commodity_flow(s, a); };
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      int rhs = (v == root ? 1 : 0) - (v == s ? 1 : 0);
      b.row(net_out(b, v, key), Sense::Equal, Rational(rhs),
            "flow_" + std::to_string(s) + "_" + std::to_string(v));
    }
  }
  if (plus) add_flow_balance_rows(b);
  return b.finish();
}

CompiledLp compile_mbfr(const SteinerInstance& inst, bool plus) {
  Builder b(inst, FormulationKind{BaseFormulation::MBFR, plus, -1});
  const Graph& g = inst.graph;
  b.add_usage_columns();
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    bool steiner = !inst.is_required(v);
    b.add(VariableKey::balance(v), plus && steiner ? std::optional<Rational>(Rational(0)) : std::nullopt);
  }
  for (VertexId r : inst.required) {
    for (ArcId a = 0; a < g.num_arcs(); ++a) b.add(VariableKey::commodity_flow(r, a), Rational(0));
  }
  for (VertexId r : inst.required) {
    auto key = [r](ArcId a) { return VariableKey::commodity_flow(r, a); };
    add_capacity_rows(b, key, "_" + std::to_string(r));
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      auto terms = net_out(b, v, key);
      terms.push_back({b.col(VariableKey::balance(v)), Rational(-1)});
      b.row(std::move(terms), Sense::Equal, Rational(v == r ? 2 : 0),
            "bal_" + std::to_string(r) + "_" + std::to_string(v));
    }
  }
  return b.finish();
}

CompiledLp compile_bcr_explicit(const SteinerInstance& inst, VertexId root, bool plus) {
  check_explicit_size(inst);
  root = resolve_root(inst, root);
  Builder b(inst, FormulationKind{BaseFormulation::BCR, plus, root});
  const Graph& g = inst.graph;
  const int n = g.num_vertices();
  b.add_usage_columns();
  for (ArcId a = 0; a < g.num_arcs(); ++a) b.add(VariableKey::root_flow(a), Rational(0));
  add_capacity_rows(b, [](ArcId a) { return VariableKey::root_flow(a); }, "");
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (!((mask >> root) & 1u)) continue;
    auto in = mask_members(mask, n);
    bool all_required_inside = std::all_of(inst.required.begin(), inst.required.end(),
                                           [&](VertexId r) { return in[static_cast<size_t>(r)]; });
    if (all_required_inside) continue;
    std::vector<Term> terms;
    for (ArcId a = 0; a < g.num_arcs(); ++a) {
      DirectedEdge d = g.arc(a);
      if (in[static_cast<size_t>(d.tail)] && !in[static_cast<size_t>(d.head)]) {
        terms.push_back({b.col(VariableKey::root_flow(a)), Rational(1)});
      }
    }
    b.row(std::move(terms), Sense::GreaterEqual, Rational(1), set_name("cut", mask));
  }
  if (plus) add_flow_balance_rows(b);
  return b.finish();
}

CompiledLp compile_mbcr_explicit(const SteinerInstance& inst, bool plus) {
  check_explicit_size(inst);
  Builder b(inst, FormulationKind{BaseFormulation::MBCR, plus, -1});
  const Graph& g = inst.graph;
  const int n = g.num_vertices();
  b.add_usage_columns();
  for (VertexId v = 0; v < n; ++v) {
    bool steiner = !inst.is_required(v);
    b.add(VariableKey::balance(v), plus && steiner ? std::optional<Rational>(Rational(0)) : std::nullopt);
  }
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    auto in = mask_members(mask, n);
    auto terms = cut_usage(b, in);
    for (VertexId v = 0; v < n; ++v) {
      if (in[static_cast<size_t>(v)]) terms.push_back({b.col(VariableKey::balance(v)), Rational(-1)});
    }
    b.row(std::move(terms), Sense::GreaterEqual, Rational(meets_required(inst, in) ? 2 : 0), set_name("cut", mask));
  }
  std::vector<Term> total;
  for (VertexId v = 0; v < n; ++v) total.push_back({b.col(VariableKey::balance(v)), Rational(1)});
  b.row(std::move(total), Sense::Equal, Rational(-2), "balance_total");
  return b.finish();
}

CompiledLp compile_ster_explicit(const SteinerInstance& inst, bool plus) {
  check_explicit_size(inst);
  Builder b(inst, FormulationKind{BaseFormulation::STER, plus, -1});
  const Graph& g = inst.graph;
  const int n = g.num_vertices();
  b.add_usage_columns();
  for (VertexId v = 0; v < n; ++v) b.add(VariableKey::inclusion(v), Rational(0));
  std::vector<Term> total;
  for (EdgeId e = 0; e < g.num_edges(); ++e) total.push_back({b.col(VariableKey::edge_usage(e)), Rational(1)});
  for (VertexId v = 0; v < n; ++v) total.push_back({b.col(VariableKey::inclusion(v)), Rational(-1)});
  b.row(std::move(total), Sense::Equal, Rational(-1), "tree_size");
  for (uint32_t mask = 1; mask < (1u << n); ++mask) {
    auto in = mask_members(mask, n);
    auto terms = inner_usage(b, in);
    for (VertexId v = 0; v < n; ++v) {
      if (in[static_cast<size_t>(v)]) terms.push_back({b.col(VariableKey::inclusion(v)), Rational(-1)});
    }
    b.row(std::move(terms), Sense::LessEqual, Rational(meets_required(inst, in) ? -1 : 0), set_name("subtour", mask));
  }
  if (plus) {
    for (VertexId v = 0; v < n; ++v) {
      if (inst.is_required(v)) continue;
      std::vector<Term> terms;
      for (EdgeId e : g.incident(v)) terms.push_back({b.col(VariableKey::edge_usage(e)), Rational(1)});
      terms.push_back({b.col(VariableKey::inclusion(v)), Rational(-2)});
      b.row(std::move(terms), Sense::GreaterEqual, Rational(0), "plus_" + std::to_string(v));
    }
  }
  return b.finish();
}

CompiledLp compile(const SteinerInstance& inst, const FormulationKind& kind) {
  switch (kind.base) {
    case BaseFormulation::BCR: return compile_bcr_explicit(inst, kind.root, kind.plus);
    case BaseFormulation::MCFR: return compile_mcfr(inst, kind.root, kind.plus);
    case BaseFormulation::MBFR: return compile_mbfr(inst, kind.plus);
    case BaseFormulation::MBCR: return compile_mbcr_explicit(inst, kind.plus);
    case BaseFormulation::STER: return compile_ster_explicit(inst, kind.plus);
  }
  throw FormulationError("unknown formulation");
}

std::vector<std::vector<VertexId>> subsets_up_to(const std::vector<VertexId>& pool, int limit) {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> current;
  std::function<void(size_t)> rec = [&](size_t start) {
    if (current.size() >= 2) out.push_back(current);
    if (static_cast<int>(current.size()) == limit) return;
    for (size_t i = start; i < pool.size(); ++i) {
      current.push_back(pool[i]);
      rec(i + 1);
      current.pop_back();
    }
  };
  rec(0);
  return out;
}

CompiledLp add_valid_constraints(CompiledLp compiled, int group, int max_subset_size) {
  if (group != 1 && group != 2) throw FormulationError("valid constraint group must be 1 or 2");
  const SteinerInstance& inst = *compiled.instance;
  const Graph& g = inst.graph;
  RationalLp& lp = compiled.lp;
  const BaseFormulation base = compiled.kind.base;
  const int n = g.num_vertices();
  auto col = [&](const VariableKey& k) { return lp.column(k); };
  auto in_flow = [&](const std::vector<bool>& in, std::vector<Term>& terms, const Rational& sign) {
    for (ArcId a = 0; a < g.num_arcs(); ++a) {
      DirectedEdge d = g.arc(a);
      if (in[static_cast<size_t>(d.head)] && !in[static_cast<size_t>(d.tail)]) terms.push_back({col(VariableKey::root_flow(a)), sign});
    }
  };
  auto cut_terms = [&](const std::vector<bool>& in, std::vector<Term>& terms, const Rational& sign) {
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const Edge& ed = g.edge(e);
      if (in[static_cast<size_t>(ed.u)] != in[static_cast<size_t>(ed.v)]) terms.push_back({col(VariableKey::edge_usage(e)), sign});
    }
  };
  auto single = [n](VertexId v) {
    std::vector<bool> in(static_cast<size_t>(n), false);
    in[static_cast<size_t>(v)] = true;
    return in;
  };
  const std::string tag = "valid" + std::to_string(group) + "_";

  if (group == 1) {
    for (VertexId v = 0; v < n; ++v) {
      std::vector<Term> terms;
      switch (base) {
        case BaseFormulation::BCR:
        case BaseFormulation::MCFR:
          in_flow(single(v), terms, Rational(1));
          lp.add_constraint(std::move(terms), Sense::LessEqual, Rational(v == compiled.kind.root ? 0 : 1),
                            tag + std::to_string(v));
          break;
        case BaseFormulation::MBFR:
        case BaseFormulation::MBCR:
          cut_terms(single(v), terms, Rational(1));
          terms.push_back({col(VariableKey::balance(v)), Rational(-1)});
          lp.add_constraint(std::move(terms), Sense::LessEqual, Rational(2), tag + std::to_string(v));
          break;
        case BaseFormulation::STER:
          lp.add_constraint({{col(VariableKey::inclusion(v)), Rational(1)}}, Sense::LessEqual, Rational(1),
                            tag + std::to_string(v));
          break;
      }
    }
  } else {
    std::vector<VertexId> steiner;
    for (VertexId v = 0; v < n; ++v) {
      if (!inst.is_required(v)) steiner.push_back(v);
    }
    int counter = 0;
    for (const auto& subset : subsets_up_to(steiner, max_subset_size)) {
      std::vector<bool> in(static_cast<size_t>(n), false);
      for (VertexId v : subset) in[static_cast<size_t>(v)] = true;
      for (VertexId v : subset) {
        std::vector<Term> terms;
        std::string name = tag + std::to_string(counter++);
        switch (base) {
          case BaseFormulation::BCR:
          case BaseFormulation::MCFR:
            in_flow(single(v), terms, Rational(1));
            in_flow(in, terms, Rational(-1));
            lp.add_constraint(std::move(terms), Sense::LessEqual, Rational(0), name);
            break;
          case BaseFormulation::MBFR:
          case BaseFormulation::MBCR:
            cut_terms(in, terms, Rational(1));
            cut_terms(single(v), terms, Rational(-1));
            for (VertexId x : subset) {
              if (x != v) terms.push_back({col(VariableKey::balance(x)), Rational(-1)});
            }
            lp.add_constraint(std::move(terms), Sense::GreaterEqual, Rational(0), name);
            break;
          case BaseFormulation::STER:
            for (EdgeId e = 0; e < g.num_edges(); ++e) {
              const Edge& ed = g.edge(e);
              if (in[static_cast<size_t>(ed.u)] && in[static_cast<size_t>(ed.v)]) terms.push_back({col(VariableKey::edge_usage(e)), Rational(1)});
            }
            for (VertexId x : subset) {
              if (x != v) terms.push_back({col(VariableKey::inclusion(x)), Rational(-1)});
            }
            lp.add_constraint(std::move(terms), Sense::LessEqual, Rational(0), name);
            break;
        }
      }
    }
  }
  compiled.valid_groups.push_back(group);
  return compiled;
}

}  // namespace steiner_gap
