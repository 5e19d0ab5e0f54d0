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


#include "steiner_gap/embeddings.hpp"

#include <string>

#include "steiner_gap/simplex_geometry.hpp"

namespace steiner_gap {

namespace {

Rational l1_distance(const std::vector<Rational>& a, const std::vector<Rational>& b) {
  Rational total;
  for (size_t i = 0; i < a.size(); ++i) total += (a[i] - b[i]).abs();
  return total;
}

Rational coordinate_sum(const std::vector<Rational>& a) {
  Rational total;
  for (const Rational& x : a) total += x;
  return total;
}

bool fail(std::string* reason, const std::string& message) {
  if (reason != nullptr) *reason = message;
  return false;
}

void check_shape(const SteinerInstance& inst, const SimplexEmbedding& emb) {
  if (static_cast<int>(emb.y.size()) != inst.graph.num_vertices()) {
    throw EmbeddingError("embedding does not cover every vertex");
  }
  const size_t dims = inst.required.size();
  for (const auto& point : emb.y) {
    if (point.size() != dims) throw EmbeddingError("embedding point has the wrong dimension");
  }
}

}  // namespace

std::vector<int> terminal_dimensions(const SteinerInstance& inst, const SimplexEmbedding& emb) {
  const size_t n = inst.required.size();
  std::vector<int> dims = emb.terminal_dims;
  if (dims.empty()) {
    for (VertexId r : inst.required) dims.push_back(corner_index(inst, r));
  }
  if (dims.size() != n) throw EmbeddingError("terminal-dimension map has the wrong length");
  std::vector<bool> seen(n, false);
  for (int i : dims) {
    if (i < 0 || i >= static_cast<int>(n) || seen[static_cast<size_t>(i)]) {
      throw EmbeddingError("terminal-dimension map missing or not a bijection");
    }
    seen[static_cast<size_t>(i)] = true;
  }
  return dims;
}

bool verify_se(const SteinerInstance& inst, const SimplexEmbedding& emb, bool above, std::string* reason) {
  terminal_dimensions(inst, emb);
  check_shape(inst, emb);
  const Graph& g = inst.graph;
  if (emb.size.sign() < 0) return fail(reason, "negative size");
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto& point = emb.y[static_cast<size_t>(v)];
    for (const Rational& x : point) {
      if (x.sign() < 0) return fail(reason, "negative coordinate at vertex " + std::to_string(v));
    }
    Rational total = coordinate_sum(point);
    bool on_simplex = above && !inst.is_required(v) ? total >= emb.size : total == emb.size;
    if (!on_simplex) {
      return fail(reason, "vertex " + std::to_string(v) + " has coordinate sum " + total.to_string());
    }
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    Rational dist = l1_distance(emb.y[static_cast<size_t>(edge.u)], emb.y[static_cast<size_t>(edge.v)]);
    if (dist > g.cost(e)) {
      return fail(reason, "edge " + std::to_string(e) + " stretched to " + dist.to_string() + " above cost " +
                              g.cost(e).to_string());
    }
  }
  return true;
}

Rational se_objective(const SteinerInstance& inst, const SimplexEmbedding& emb) {
  std::vector<int> dims = terminal_dimensions(inst, emb);
  check_shape(inst, emb);
  Rational total;
  for (size_t k = 0; k < inst.required.size(); ++k) {
    total += emb.y[static_cast<size_t>(inst.required[k])][static_cast<size_t>(dims[k])];
  }
  return Rational(2) * (total - emb.size);
}

SimplexEmbedding canonical_embedding(const SteinerInstance& inst) {
  SimplexEmbedding emb;
  const Graph& g = inst.graph;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    const auto* p = std::get_if<SimplexPoint>(&g.label(v));
    if (p == nullptr || p->coords.size() != inst.required.size()) {
      throw EmbeddingError("canonical embedding needs simplex point labels of dimension |R|");
    }
    std::vector<Rational> point;
    for (int x : p->coords) point.emplace_back(x);
    emb.y.push_back(std::move(point));
  }
  if (inst.required.empty()) throw EmbeddingError("canonical embedding needs required vertices");
  emb.size = Rational(std::get<SimplexPoint>(g.label(inst.required.front())).size());
  return emb;
}

Rational ckr_objective(const SteinerInstance& inst, const SimplexEmbedding& x) {
  if (inst.required.size() != 3) throw EmbeddingError("CKR objective needs exactly three terminals");
  std::vector<int> dims = terminal_dimensions(inst, x);
  check_shape(inst, x);
  for (const auto& point : x.y) {
    for (const Rational& c : point) {
      if (c.sign() < 0) throw EmbeddingError("CKR point has a negative coordinate");
    }
    if (coordinate_sum(point) != Rational(1)) throw EmbeddingError("CKR point is off the unit simplex");
  }
  for (size_t k = 0; k < 3; ++k) {
    if (x.y[static_cast<size_t>(inst.required[k])][static_cast<size_t>(dims[k])] != Rational(1)) {
      throw EmbeddingError("terminal is not at its corner");
    }
  }
  Rational total;
  const Graph& g = inst.graph;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& edge = g.edge(e);
    total += g.cost(e) * l1_distance(x.y[static_cast<size_t>(edge.u)], x.y[static_cast<size_t>(edge.v)]) /
             Rational(2);
  }
  return total;
}

SimplexEmbedding ckr_canonical_for_dual(int s, int delta) {
  return ckr_canonical_for_dual(gen_multiway_dual(s, delta), s, delta);
}

SimplexEmbedding ckr_canonical_for_dual(const SteinerInstance& dual, int s, int delta) {
  if (delta < 1 || 2 * delta > s) throw EmbeddingError("dual embedding needs 1 <= delta and 2 delta <= s");
  SimplexEmbedding emb = canonical_embedding(dual);
  const Rational q(2 * s - 3 * delta + 1);
  if (emb.size != q) throw EmbeddingError("instance corners do not match the parameters");
  for (auto& point : emb.y) {
    for (Rational& c : point) c /= q;
  }
  emb.size = Rational(1);
  return emb;
}

Rational ckr_gap_formula(int q) {
  if (q < 1) throw EmbeddingError("CKR gap formula needs q >= 1");
  const Rational x(q);
  switch (q % 3) {
    case 0: return (Rational(12) * x + Rational(12)) / (Rational(11) * x + Rational(12));
    case 1: return Rational(12) * x / (Rational(11) * x + Rational(1));
    default: return Rational(12) * x * x / (Rational(11) * x * x + x - Rational(1));
  }
}

}  // namespace steiner_gap
