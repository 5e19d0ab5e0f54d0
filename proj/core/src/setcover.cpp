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


#include "steiner_gap/setcover.hpp"

#include <algorithm>
#include <bit>

namespace steiner_gap {

namespace {

Rational power(int base, int exponent) {
  Rational out(1);
  for (int i = 0; i < exponent; ++i) out *= Rational(base);
  return out;
}

bool contains(const std::vector<int>& set, int element) {
  return std::binary_search(set.begin(), set.end(), element);
}

void check_layers(const SetCoverInstance& family, int p) {
  if (p < 1) throw SetCoverError("layer count p must be at least 1");
  if (family.num_sets() == 0) throw SetCoverError("empty set family");
}

// Words of the given length over the universe, in lexicographic order.
std::vector<std::vector<int>> words(const std::vector<int>& universe, int length) {
  std::vector<std::vector<int>> out{{}};
  for (int k = 0; k < length; ++k) {
    std::vector<std::vector<int>> next;
    for (const auto& w : out) {
      for (int e : universe) {
        next.push_back(w);
        next.back().push_back(e);
      }
    }
    out = std::move(next);
  }
  return out;
}

VertexId vertex_of(const Graph& g, int level, const std::vector<int>& word, int item) {
  auto v = g.find_vertex(SetCoverTuple{level, word, item});
  if (!v) throw SetCoverError("layered graph lacks an expected vertex");
  return *v;
}

}  // namespace

SetCoverInstance::SetCoverInstance(SetFamily sets) {
  if (sets.empty()) throw SetCoverError("set family must be nonempty");
  for (auto& set : sets) {
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    if (set.empty()) throw SetCoverError("sets must be nonempty");
    for (int e : set) ++frequency_[e];
  }
  sets_ = std::move(sets);
  for (const auto& [e, count] : frequency_) universe_.push_back(e);
}

int SetCoverInstance::frequency(int element) const {
  auto it = frequency_.find(element);
  return it == frequency_.end() ? 0 : it->second;
}

int SetCoverInstance::min_frequency() const {
  int best = 0;
  for (const auto& [e, count] : frequency_) best = best == 0 ? count : std::min(best, count);
  return best;
}

SetCoverInstance gen_skutella_family(int n) {
  if (n < 1 || n > 16) throw SetCoverError("skutella family needs 1 <= n <= 16");
  const unsigned top = 1u << n;
  SetFamily sets;
  for (unsigned x = 1; x < top; ++x) {
    std::vector<int> set;
    for (unsigned y = 1; y < top; ++y) {
      if (std::popcount(x & y) % 2 == 1) set.push_back(static_cast<int>(y));
    }
    sets.push_back(std::move(set));
  }
  return SetCoverInstance(std::move(sets));
}

SteinerInstance gen_sci(const SetCoverInstance& family, int p, bool extended) {
  check_layers(family, p);
  const SetFamily& sets = family.sets();
  const std::vector<int>& universe = family.universe();
  Graph g;
  const VertexId root = g.add_vertex(SetCoverTuple{0, {}, -1});
  // Layers 1..p: (word of length i-1, set index).
  for (int i = 1; i <= p; ++i) {
    for (const auto& w : words(universe, i - 1)) {
      for (int s = 0; s < family.num_sets(); ++s) g.add_vertex(SetCoverTuple{i, w, s});
    }
  }
  std::vector<VertexId> required{root};
  for (const auto& w : words(universe, p - 1)) {
    for (int e : universe) required.push_back(g.add_vertex(SetCoverTuple{p + 1, w, e}));
  }
  for (int s = 0; s < family.num_sets(); ++s) g.add_edge(root, vertex_of(g, 1, {}, s), Rational(1));
  for (int i = 1; i < p; ++i) {
    for (const auto& w : words(universe, i - 1)) {
      for (int s = 0; s < family.num_sets(); ++s) {
        VertexId from = vertex_of(g, i, w, s);
        for (int e : sets[static_cast<size_t>(s)]) {
          std::vector<int> longer = w;
          longer.push_back(e);
          for (int t = 0; t < family.num_sets(); ++t) g.add_edge(from, vertex_of(g, i + 1, longer, t), Rational(1));
        }
      }
    }
  }
  for (const auto& w : words(universe, p - 1)) {
    for (int s = 0; s < family.num_sets(); ++s) {
      VertexId from = vertex_of(g, p, w, s);
      for (int e : sets[static_cast<size_t>(s)]) g.add_edge(from, vertex_of(g, p + 1, w, e), Rational(1));
    }
  }
  if (extended) {
    VertexId pendant = g.add_vertex(SetCoverTuple{-1, {}, -1});
    g.add_edge(root, pendant, Rational(1));
    required.front() = pendant;
  }
  std::sort(required.begin(), required.end());
  std::string name = std::string(extended ? "sci_ext" : "sci") + "_p" + std::to_string(p);
  return make_instance(std::move(g), std::move(required), name);
}

Rational sci_opt_formula(const SetCoverInstance& family, int p, int cover_size) {
  check_layers(family, p);
  const int n = family.universe_size();
  if (n < 2) throw SetCoverError("formula needs a universe of at least two elements");
  return (Rational(1) + Rational(cover_size, n - 1)) * (power(n, p) - Rational(1)) + Rational(1);
}

SetCoverInstance equalize_frequency(const SetCoverInstance& family) {
  const int keep = family.min_frequency();
  SetFamily sets(family.sets().size());
  for (int e : family.universe()) {
    int kept = 0;
    for (size_t s = 0; s < family.sets().size() && kept < keep; ++s) {
      if (contains(family.sets()[s], e)) {
        sets[s].push_back(e);
        ++kept;
      }
    }
  }
  std::erase_if(sets, [](const std::vector<int>& set) { return set.empty(); });
  return SetCoverInstance(std::move(sets));
}

McfrSolution sci_fractional_solution(const SetCoverInstance& family, int p, bool extended) {
  const SetCoverInstance eq = equalize_frequency(family);
  const SteinerInstance inst = gen_sci(eq, p, extended);
  const Graph& g = inst.graph;
  const SetFamily& sets = eq.sets();
  const Rational once(1, eq.min_frequency());
  const Rational twice = once * once;
  const VertexId root = vertex_of(g, 0, {}, -1);

  McfrSolution sol;
  sol.f.assign(static_cast<size_t>(g.num_arcs()), Rational(0));
  // Downward arcs carry 1/f next to the required layers and 1/f^2 between.
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    DirectedEdge de = g.arc(a);
    const auto& tail = std::get<SetCoverTuple>(g.label(de.tail));
    const auto& head = std::get<SetCoverTuple>(g.label(de.head));
    if (head.level != tail.level + 1) continue;
    bool boundary = tail.level <= 0 || head.level == p + 1;
    sol.f[static_cast<size_t>(a)] = tail.level < 0 ? Rational(1) : boundary ? once : twice;
  }
  sol.u.resize(static_cast<size_t>(g.num_edges()));
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    sol.u[static_cast<size_t>(e)] = sol.f[static_cast<size_t>(2 * e)] + sol.f[static_cast<size_t>(2 * e + 1)];
  }
  sol.root = root;
  if (extended) {
    sol.root = vertex_of(g, -1, {}, -1);
  }
  // The commodity of (w, e) follows every set chain whose i-th set contains
  // the i-th letter of w|e.
  for (VertexId target : inst.required) {
    if (target == sol.root) continue;
    const auto& label = std::get<SetCoverTuple>(g.label(target));
    std::vector<int> letters = label.word;
    letters.push_back(label.item);
    ArcValues flow(static_cast<size_t>(g.num_arcs()), Rational(0));
    if (extended) flow[static_cast<size_t>(g.arc_between(sol.root, root))] = Rational(1);
    auto prefix = [&](int length) { return std::vector<int>(letters.begin(), letters.begin() + length); };
    for (int s = 0; s < eq.num_sets(); ++s) {
      if (!contains(sets[static_cast<size_t>(s)], letters[0])) continue;
      flow[static_cast<size_t>(g.arc_between(root, vertex_of(g, 1, {}, s)))] = once;
    }
    for (int i = 1; i < p; ++i) {
      for (int s = 0; s < eq.num_sets(); ++s) {
        if (!contains(sets[static_cast<size_t>(s)], letters[static_cast<size_t>(i - 1)])) continue;
        VertexId from = vertex_of(g, i, prefix(i - 1), s);
        for (int t = 0; t < eq.num_sets(); ++t) {
          if (!contains(sets[static_cast<size_t>(t)], letters[static_cast<size_t>(i)])) continue;
          flow[static_cast<size_t>(g.arc_between(from, vertex_of(g, i + 1, prefix(i), t)))] = twice;
        }
      }
    }
    for (int s = 0; s < eq.num_sets(); ++s) {
      if (!contains(sets[static_cast<size_t>(s)], label.item)) continue;
      flow[static_cast<size_t>(g.arc_between(vertex_of(g, p, label.word, s), target))] = once;
    }
    sol.g[target] = std::move(flow);
  }
  return sol;
}

Rational sci_fractional_objective(const SetCoverInstance& family, int p) {
  check_layers(family, p);
  const SetCoverInstance eq = equalize_frequency(family);
  const int n = eq.universe_size();
  if (n < 2) throw SetCoverError("formula needs a universe of at least two elements");
  const Rational top = power(n, p);
  return top + Rational(eq.num_sets(), eq.min_frequency()) * (top - Rational(1)) / Rational(n - 1);
}

Rational sci_fractional_bound(const SetCoverInstance& family, int p) {
  check_layers(family, p);
  const int n = family.universe_size();
  if (n < 2) throw SetCoverError("formula needs a universe of at least two elements");
  const Rational ratio(family.num_sets(), family.min_frequency());
  return (Rational(1) + ratio / Rational(n - 1)) * (power(n, p) - Rational(1)) + Rational(1);
}

Rational sci_gap_bound(const SetCoverInstance& family, int p) {
  const int cover = exact_set_cover(family.sets()).size;
  return sci_opt_formula(family, p, cover) / sci_fractional_bound(family, p);
}

Rational sci_gap_limit(const SetCoverInstance& family) {
  const int n = family.universe_size();
  if (n < 2) throw SetCoverError("limit needs a universe of at least two elements");
  const int cover = exact_set_cover(family.sets()).size;
  return Rational(n - 1 + cover) / (Rational(n - 1) + Rational(family.num_sets(), family.min_frequency()));
}

}  // namespace steiner_gap
