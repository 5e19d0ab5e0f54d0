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


#include "steiner_gap/serialization.hpp"

#include <json.hpp>
#include <map>
#include <utility>
#include <vector>

namespace steiner_gap {

namespace {

using nlohmann::json;

template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

json parse_text(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw SerializationError(std::string("malformed JSON: ") + e.what());
  }
}

Rational rational_of(const json& value) {
  try {
    if (value.is_string()) return Rational::parse(value.get<std::string>());
    if (value.is_number_integer()) return Rational(value.get<int64_t>());
  } catch (const std::invalid_argument& e) {
    throw SerializationError(e.what());
  }
  throw SerializationError("expected a rational as \"p/q\"");
}

json label_json(const VertexLabel& label) {
  return std::visit(Overloaded{
                        [](const std::monostate&) { return json(nullptr); },
                        [](const SimplexPoint& p) { return json{{"type", "simplex"}, {"coords", p.coords}}; },
                        [](const GoemansRole& r) {
                          return json{{"type", "goemans"}, {"kind", std::string(1, r.kind)}, {"i", r.i}, {"j", r.j}};
                        },
                        [](const SetCoverTuple& t) {
                          return json{{"type", "setcover"}, {"level", t.level}, {"word", t.word}, {"item", t.item}};
                        },
                        [](const OpaqueLabel& o) { return json{{"type", "opaque"}, {"name", o.name}}; },
                    },
                    label);
}

VertexLabel label_from(const json& j) {
  if (j.is_null()) return std::monostate{};
  try {
    const std::string type = j.at("type").get<std::string>();
    if (type == "simplex") return SimplexPoint{j.at("coords").get<std::vector<int>>()};
    if (type == "goemans") {
      std::string kind = j.at("kind").get<std::string>();
      if (kind.size() != 1) throw SerializationError("goemans kind must be one character");
      return GoemansRole{kind[0], j.at("i").get<int>(), j.at("j").get<int>()};
    }
    if (type == "setcover") {
      return SetCoverTuple{j.at("level").get<int>(), j.at("word").get<std::vector<int>>(), j.at("item").get<int>()};
    }
    if (type == "opaque") return OpaqueLabel{j.at("name").get<std::string>()};
    throw SerializationError("unknown label type '" + type + "'");
  } catch (const json::exception& e) {
    throw SerializationError(std::string("malformed label: ") + e.what());
  }
}

// Named view of every value in a solution.
class Slots {
 public:
  explicit Slots(const Graph& g, BaseFormulation base) : g_(g), base_(base) {}

  void add(const VariableKey& key, Rational* value) { slots_.emplace_back(variable_name(g_, base_, key), value); }

  void add_edges(EdgeValues& u) {
    for (EdgeId e = 0; e < g_.num_edges(); ++e) add(VariableKey::edge_usage(e), &u[static_cast<size_t>(e)]);
  }
  void add_root_flow(ArcValues& f) {
    for (ArcId a = 0; a < g_.num_arcs(); ++a) add(VariableKey::root_flow(a), &f[static_cast<size_t>(a)]);
  }
  void add_commodities(std::map<VertexId, ArcValues>& flows) {
    for (auto& [t, f] : flows) {
      for (ArcId a = 0; a < g_.num_arcs(); ++a) add(VariableKey::commodity_flow(t, a), &f[static_cast<size_t>(a)]);
    }
  }
  void add_vertices(VertexValues& values, bool balance) {
    for (VertexId v = 0; v < g_.num_vertices(); ++v) {
      add(balance ? VariableKey::balance(v) : VariableKey::inclusion(v), &values[static_cast<size_t>(v)]);
    }
  }

  const std::vector<std::pair<std::string, Rational*>>& all() const { return slots_; }

 private:
  const Graph& g_;
  BaseFormulation base_;
  std::vector<std::pair<std::string, Rational*>> slots_;
};

void collect(Slots& slots, FormulationSolution& sol) {
  std::visit(Overloaded{
                 [&](BcrSolution& s) {
                   slots.add_edges(s.u);
                   slots.add_root_flow(s.f);
                 },
                 [&](McfrSolution& s) {
                   slots.add_edges(s.u);
                   slots.add_root_flow(s.f);
                   slots.add_commodities(s.g);
                 },
                 [&](MbfrSolution& s) {
                   slots.add_edges(s.u);
                   slots.add_vertices(s.b, true);
                   slots.add_commodities(s.f);
                 },
                 [&](MbcrSolution& s) {
                   slots.add_edges(s.u);
                   slots.add_vertices(s.b, true);
                 },
                 [&](SterSolution& s) {
                   slots.add_edges(s.u);
                   slots.add_vertices(s.y, false);
                 },
             },
             sol);
}

VertexId root_of(const FormulationSolution& sol) {
  if (const auto* s = std::get_if<BcrSolution>(&sol)) return s->root;
  if (const auto* s = std::get_if<McfrSolution>(&sol)) return s->root;
  return -1;
}

FormulationSolution skeleton(const SteinerInstance& inst, BaseFormulation base, VertexId root) {
  const Graph& g = inst.graph;
  const EdgeValues u(static_cast<size_t>(g.num_edges()), Rational(0));
  const ArcValues f(static_cast<size_t>(g.num_arcs()), Rational(0));
  const VertexValues b(static_cast<size_t>(g.num_vertices()), Rational(0));
  switch (base) {
    case BaseFormulation::BCR: return BcrSolution{root, u, f};
    case BaseFormulation::MCFR: {
      McfrSolution s{root, u, f, {}};
      for (VertexId t : inst.required) {
        if (t != root) s.g[t] = f;
      }
      return s;
    }
    case BaseFormulation::MBFR: {
      MbfrSolution s{u, b, {}};
      for (VertexId t : inst.required) s.f[t] = f;
      return s;
    }
    case BaseFormulation::MBCR: return MbcrSolution{u, b};
    case BaseFormulation::STER: return SterSolution{u, b};
  }
  throw SerializationError("unknown formulation");
}

}  // namespace

std::string labels_to_json(const SteinerInstance& inst) {
  json labels = json::array();
  for (VertexId v = 0; v < inst.graph.num_vertices(); ++v) labels.push_back(label_json(inst.graph.label(v)));
  return json{{"name", inst.name}, {"labels", labels}}.dump(1);
}

void apply_labels_json(SteinerInstance& inst, const std::string& text) {
  json doc = parse_text(text);
  if (!doc.contains("labels") || !doc["labels"].is_array()) throw SerializationError("missing labels array");
  const json& labels = doc["labels"];
  if (static_cast<int>(labels.size()) != inst.graph.num_vertices()) {
    throw SerializationError("label count does not match the vertex count");
  }
  for (VertexId v = 0; v < inst.graph.num_vertices(); ++v) {
    inst.graph.set_label(v, label_from(labels[static_cast<size_t>(v)]));
  }
  inst.graph.check_label_uniformity();
  if (doc.contains("name") && doc["name"].is_string()) inst.name = doc["name"].get<std::string>();
}

std::string solution_to_json(const SteinerInstance& inst, const FormulationKind& kind,
                             const FormulationSolution& sol) {
  if (base_of(sol) != kind.base) throw SerializationError("solution does not match the formulation");
  FormulationSolution copy = sol;
  Slots slots(inst.graph, kind.base);
  collect(slots, copy);
  json values = json::object();
  for (const auto& [name, value] : slots.all()) {
    if (!value->is_zero()) values[name] = value->to_string();
  }
  json doc{{"formulation", to_string(kind.base)},
           {"plus", kind.plus},
           {"objective", solution_objective(inst, sol).to_string()},
           {"values", values}};
  VertexId root = root_of(sol);
  doc["root"] = root >= 0 ? json(root) : json(nullptr);
  return doc.dump(1);
}

ParsedSolution solution_from_json(const SteinerInstance& inst, const std::string& text) {
  json doc = parse_text(text);
  ParsedSolution out;
  try {
    out.kind.base = parse_base_formulation(doc.at("formulation").get<std::string>());
    out.kind.plus = doc.value("plus", false);
    if (doc.contains("root") && !doc["root"].is_null()) out.kind.root = doc["root"].get<VertexId>();
  } catch (const json::exception& e) {
    throw SerializationError(std::string("malformed solution header: ") + e.what());
  } catch (const FormulationError& e) {
    throw SerializationError(e.what());
  }
  VertexId root = -1;
  if (uses_root(out.kind.base)) {
    root = out.kind.root >= 0 ? out.kind.root : inst.default_root();
    if (!inst.is_required(root)) throw SerializationError("root is not a required vertex");
  }
  out.solution = skeleton(inst, out.kind.base, root);
  Slots slots(inst.graph, out.kind.base);
  collect(slots, out.solution);
  std::map<std::string, Rational*> by_name;
  for (const auto& [name, value] : slots.all()) by_name.emplace(name, value);
  if (!doc.contains("values") || !doc["values"].is_object()) throw SerializationError("missing values object");
  for (const auto& [name, value] : doc["values"].items()) {
    auto it = by_name.find(name);
    if (it == by_name.end()) throw SerializationError("unknown variable '" + name + "'");
    *it->second = rational_of(value);
  }
  return out;
}

std::string embedding_to_json(const SimplexEmbedding& emb) {
  json y = json::object();
  for (size_t v = 0; v < emb.y.size(); ++v) {
    json point = json::array();
    for (const Rational& c : emb.y[v]) point.push_back(c.to_string());
    y[std::to_string(v)] = point;
  }
  return json{{"size", emb.size.to_string()}, {"terminal_dims", emb.terminal_dims}, {"y", y}}.dump(1);
}

SimplexEmbedding embedding_from_json(const std::string& text) {
  json doc = parse_text(text);
  SimplexEmbedding emb;
  try {
    emb.size = rational_of(doc.at("size"));
    if (doc.contains("terminal_dims")) emb.terminal_dims = doc["terminal_dims"].get<std::vector<int>>();
    std::map<int, std::vector<Rational>> points;
    for (const auto& [key, value] : doc.at("y").items()) {
      std::vector<Rational> point;
      for (const json& c : value) point.push_back(rational_of(c));
      points[std::stoi(key)] = std::move(point);
    }
    int expected = 0;
    for (auto& [v, point] : points) {
      if (v != expected++) throw SerializationError("embedding vertex ids must be 0..n-1");
      emb.y.push_back(std::move(point));
    }
  } catch (const json::exception& e) {
    throw SerializationError(std::string("malformed embedding: ") + e.what());
  } catch (const std::logic_error& e) {
    throw SerializationError(std::string("malformed embedding: ") + e.what());
  }
  return emb;
}

std::string set_family_to_json(const SetFamily& family) { return json(family).dump(); }

SetFamily set_family_from_json(const std::string& text) {
  json doc = parse_text(text);
  try {
    return doc.get<SetFamily>();
  } catch (const json::exception& e) {
    throw SerializationError(std::string("set family must be an array of integer arrays: ") + e.what());
  }
}

}  // namespace steiner_gap
