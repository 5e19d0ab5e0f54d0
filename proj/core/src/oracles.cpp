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


#include "steiner_gap/oracles.hpp"

#include <algorithm>
#include <functional>
#include <optional>

namespace steiner_gap {
namespace {

SteinerOracleResult finish(const SteinerInstance& inst, const std::vector<EdgeId>& edges) {
  SteinerOracleResult out;
  out.tree = prune_to_steiner_tree(inst, edges);
  out.optimum = out.tree.cost;
  return out;
}

std::vector<VertexId> steiner_vertices(const SteinerInstance& inst) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < inst.num_vertices(); ++v) {
    if (!inst.is_required(v)) out.push_back(v);
  }
  return out;
}

std::vector<EdgeId> all_edges(const Graph& g) {
  std::vector<EdgeId> out(static_cast<size_t>(g.num_edges()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) out[static_cast<size_t>(e)] = e;
  return out;
}

}  // namespace

SteinerOracleResult steiner_tree_dreyfus_wagner(const SteinerInstance& inst) {
  inst.validate();
  const int k = static_cast<int>(inst.required.size());
  if (k > kDreyfusWagnerTerminalLimit) {
    throw SizeLimitExceeded("Dreyfus-Wagner needs |R| <= " + std::to_string(kDreyfusWagnerTerminalLimit));
  }
  if (k == 1) return finish(inst, {});
  const Graph& g = inst.graph;
  const int n = g.num_vertices();
  std::vector<ShortestPaths> sp;
  sp.reserve(static_cast<size_t>(n));
  for (VertexId v = 0; v < n; ++v) sp.push_back(shortest_paths(g, v));
  auto dist = [&](VertexId a, VertexId b) -> const Rational& {
    return *sp[static_cast<size_t>(a)].dist[static_cast<size_t>(b)];
  };

  // Masks range over the first k-1 terminals; the last one closes the tree.
  const int t = k - 1;
  const uint32_t full = (1u << t) - 1;
  auto idx = [n](uint32_t mask, VertexId v) {
    return static_cast<size_t>(mask) * static_cast<size_t>(n) + static_cast<size_t>(v);
  };
  const size_t states = idx(full + 1, 0);
  // best(S, v): cheapest tree on S + v. It is merged(S, via) plus a shortest
  // via-v path, and merged(S, u) joins best(A, u) and best(S - A, u).
  std::vector<Rational> best(states), merged(states);
  std::vector<VertexId> via(states, -1);
  std::vector<uint32_t> split(states, 0);

  for (int i = 0; i < t; ++i) {
    VertexId r = inst.required[static_cast<size_t>(i)];
    for (VertexId v = 0; v < n; ++v) {
      best[idx(1u << i, v)] = dist(r, v);
      via[idx(1u << i, v)] = r;
    }
  }
  for (uint32_t mask = 1; mask <= full; ++mask) {
    if ((mask & (mask - 1)) == 0) continue;
    const uint32_t low = mask & (~mask + 1);
    for (VertexId u = 0; u < n; ++u) {
      bool have = false;
      for (uint32_t sub = (mask - 1) & mask; sub > 0; sub = (sub - 1) & mask) {
        if (!(sub & low)) continue;
        Rational c = best[idx(sub, u)] + best[idx(mask ^ sub, u)];
        if (!have || c < merged[idx(mask, u)]) {
          merged[idx(mask, u)] = c;
          split[idx(mask, u)] = sub;
          have = true;
        }
      }
    }
    for (VertexId v = 0; v < n; ++v) {
      VertexId arg = -1;
      Rational val;
      for (VertexId u = 0; u < n; ++u) {
        Rational c = merged[idx(mask, u)] + dist(u, v);
        if (arg < 0 || c < val) {
          val = c;
          arg = u;
        }
      }
      best[idx(mask, v)] = val;
      via[idx(mask, v)] = arg;
    }
  }

  std::vector<EdgeId> edges;
  std::function<void(uint32_t, VertexId)> collect = [&](uint32_t mask, VertexId v) {
    VertexId u = via[idx(mask, v)];
    for (EdgeId e : path_edges(g, sp[static_cast<size_t>(u)], v)) edges.push_back(e);
    if ((mask & (mask - 1)) == 0) return;
    uint32_t sub = split[idx(mask, u)];
    collect(sub, u);
    collect(mask ^ sub, u);
  };
  const VertexId last = inst.required.back();
  collect(full, last);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  SteinerOracleResult out = finish(inst, edges);
  if (out.optimum != best[idx(full, last)]) throw std::logic_error("Dreyfus-Wagner reconstruction mismatch");
  return out;
}

SteinerOracleResult steiner_tree_by_enumeration(const SteinerInstance& inst) {
  inst.validate();
  const Graph& g = inst.graph;
  std::vector<VertexId> steiner = steiner_vertices(inst);
  if (static_cast<int>(steiner.size()) > kEnumerationSteinerLimit) {
    throw SizeLimitExceeded("subset enumeration needs at most " + std::to_string(kEnumerationSteinerLimit) +
                            " non-required vertices");
  }
  const std::vector<EdgeId> edges = all_edges(g);
  std::optional<SteinerOracleResult> best;
  std::vector<bool> keep(static_cast<size_t>(g.num_vertices()));
  for (uint32_t mask = 0; mask < (1u << steiner.size()); ++mask) {
    std::fill(keep.begin(), keep.end(), false);
    for (VertexId r : inst.required) keep[static_cast<size_t>(r)] = true;
    for (size_t i = 0; i < steiner.size(); ++i) {
      if ((mask >> i) & 1u) keep[static_cast<size_t>(steiner[i])] = true;
    }
    std::vector<EdgeId> forest = minimum_spanning_forest(g, edges, keep);
    int kept = static_cast<int>(std::count(keep.begin(), keep.end(), true));
    if (static_cast<int>(forest.size()) != kept - 1) continue;  // G[R + X] disconnected
    Rational cost = edge_set_cost(g, forest);
    if (!best || cost < best->optimum) best = finish(inst, forest);
  }
  return *best;
}

SteinerOracleResult exact_steiner_tree(const SteinerInstance& inst) {
  if (static_cast<int>(inst.required.size()) <= kDreyfusWagnerTerminalLimit) return steiner_tree_dreyfus_wagner(inst);
  if (inst.num_vertices() - static_cast<int>(inst.required.size()) <= kEnumerationSteinerLimit) {
    return steiner_tree_by_enumeration(inst);
  }
  throw SizeLimitExceeded("instance too large for the exact Steiner tree oracles");
}

SteinerOracleResult mst_two_approx(const SteinerInstance& inst) {
  inst.validate();
  const Graph& g = inst.graph;
  const size_t k = inst.required.size();
  std::vector<ShortestPaths> sp;
  for (VertexId r : inst.required) sp.push_back(shortest_paths(g, r));
  // Prim on the metric closure of R.
  std::vector<bool> in_tree(k, false);
  std::vector<std::optional<Rational>> key(k);
  std::vector<int> parent(k, -1);
  key[0] = Rational(0);
  std::vector<EdgeId> edges;
  for (size_t round = 0; round < k; ++round) {
    int pick = -1;
    for (size_t i = 0; i < k; ++i) {
      if (in_tree[i] || !key[i]) continue;
      if (pick < 0 || *key[i] < *key[static_cast<size_t>(pick)]) pick = static_cast<int>(i);
    }
    in_tree[static_cast<size_t>(pick)] = true;
    if (parent[static_cast<size_t>(pick)] >= 0) {
      for (EdgeId e : path_edges(g, sp[static_cast<size_t>(parent[static_cast<size_t>(pick)])],
                                 inst.required[static_cast<size_t>(pick)])) {
        edges.push_back(e);
      }
    }
    for (size_t i = 0; i < k; ++i) {
      if (in_tree[i]) continue;
      const Rational& d = *sp[static_cast<size_t>(pick)].dist[static_cast<size_t>(inst.required[i])];
      if (!key[i] || d < *key[i]) {
        key[i] = d;
        parent[i] = pick;
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return finish(inst, edges);
}

Rational multiway_cut_cost(const Graph& g, const std::vector<int>& labeling) {
  Rational total;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (labeling.at(static_cast<size_t>(g.edge(e).u)) != labeling.at(static_cast<size_t>(g.edge(e).v))) {
      total += g.cost(e);
    }
  }
  return total;
}

MultiwayCutResult exact_multiway_cut(const SteinerInstance& inst) {
  inst.validate();
  const Graph& g = inst.graph;
  const int k = static_cast<int>(inst.required.size());
  std::vector<VertexId> free = steiner_vertices(inst);
  if (static_cast<int>(free.size()) > kMultiwaySteinerLimit) {
    throw SizeLimitExceeded("multiway cut enumeration needs at most " + std::to_string(kMultiwaySteinerLimit) +
                            " non-required vertices");
  }
  std::vector<int> label(static_cast<size_t>(g.num_vertices()), -1);
  for (int i = 0; i < k; ++i) label[static_cast<size_t>(inst.required[static_cast<size_t>(i)])] = i;
  // Cost of edges whose endpoints are both labelled, accumulated as vertices
  // are assigned in order; branches at or above the incumbent are cut.
  std::optional<Rational> best;
  std::vector<int> best_label;
  Rational base;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    int a = label[static_cast<size_t>(g.edge(e).u)];
    int b = label[static_cast<size_t>(g.edge(e).v)];
    if (a >= 0 && b >= 0 && a != b) base += g.cost(e);
  }
  std::function<void(size_t, const Rational&)> assign = [&](size_t pos, const Rational& partial) {
    if (best && !(partial < *best)) return;
    if (pos == free.size()) {
      best = partial;
      best_label = label;
      return;
    }
    VertexId v = free[pos];
    for (int c = 0; c < k; ++c) {
      Rational added;
      for (EdgeId e : g.incident(v)) {
        int other = label[static_cast<size_t>(g.other(e, v))];
        if (other >= 0 && other != c) added += g.cost(e);
      }
      label[static_cast<size_t>(v)] = c;
      assign(pos + 1, partial + added);
      label[static_cast<size_t>(v)] = -1;
    }
  };
  assign(0, base);
  return {*best, best_label};
}

SetCoverResult exact_set_cover(const SetFamily& family) {
  const int m = static_cast<int>(family.size());
  if (m > kSetCoverFamilyLimit) {
    throw SizeLimitExceeded("set cover oracle needs at most " + std::to_string(kSetCoverFamilyLimit) + " sets");
  }
  std::vector<int> universe;
  for (const auto& set : family) universe.insert(universe.end(), set.begin(), set.end());
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  const size_t words = (universe.size() + 63) / 64;
  std::vector<std::vector<uint64_t>> bits(static_cast<size_t>(m), std::vector<uint64_t>(words, 0));
  for (int i = 0; i < m; ++i) {
    for (int x : family[static_cast<size_t>(i)]) {
      size_t pos = static_cast<size_t>(std::lower_bound(universe.begin(), universe.end(), x) - universe.begin());
      bits[static_cast<size_t>(i)][pos / 64] |= uint64_t{1} << (pos % 64);
    }
  }
  if (universe.empty()) return {};
  std::vector<uint64_t> target(words, ~uint64_t{0});
  if (universe.size() % 64) target.back() = (uint64_t{1} << (universe.size() % 64)) - 1;
  // Lexicographic combinations of increasing size.
  for (int size = 1; size <= m; ++size) {
    std::vector<int> pick(static_cast<size_t>(size));
    for (int i = 0; i < size; ++i) pick[static_cast<size_t>(i)] = i;
    while (true) {
      std::vector<uint64_t> cover(words, 0);
      for (int i : pick) {
        for (size_t w = 0; w < words; ++w) cover[w] |= bits[static_cast<size_t>(i)][w];
      }
      if (cover == target) return {size, pick};
      int i = size - 1;
      while (i >= 0 && pick[static_cast<size_t>(i)] == m - size + i) --i;
      if (i < 0) break;
      ++pick[static_cast<size_t>(i)];
      for (int j = i + 1; j < size; ++j) pick[static_cast<size_t>(j)] = pick[static_cast<size_t>(j - 1)] + 1;
    }
  }
  throw std::logic_error("set cover: unreachable");
}

}  // namespace steiner_gap
