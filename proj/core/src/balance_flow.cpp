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

#include "steiner_gap/solutions.hpp"

namespace steiner_gap {

namespace {

// Residual network with paired forward and backward arcs.
class FlowNetwork {
 public:
  explicit FlowNetwork(int nodes) : out_(static_cast<size_t>(nodes)) {}

  int add_arc(int from, int to, const Rational& capacity) {
    int id = static_cast<int>(head_.size());
    head_.push_back(to);
    residual_.push_back(capacity);
    out_[static_cast<size_t>(from)].push_back(id);
    head_.push_back(from);
    residual_.push_back(Rational(0));
    out_[static_cast<size_t>(to)].push_back(id + 1);
    return id;
  }

  // Flow currently routed on an arc created by add_arc.
  const Rational& flow(int arc) const { return residual_[static_cast<size_t>(arc ^ 1)]; }

  // Shortest augmenting paths until none remains.
  void max_flow(int source, int sink) {
    for (;;) {
      std::vector<int> via = search(source);
      if (via[static_cast<size_t>(sink)] < 0) return;
      Rational bottleneck;
      bool first = true;
      for (int v = sink; v != source; v = head_[static_cast<size_t>(via[static_cast<size_t>(v)] ^ 1)]) {
        const Rational& cap = residual_[static_cast<size_t>(via[static_cast<size_t>(v)])];
        if (first || cap < bottleneck) bottleneck = cap;
        first = false;
      }
      for (int v = sink; v != source; v = head_[static_cast<size_t>(via[static_cast<size_t>(v)] ^ 1)]) {
        const auto a = static_cast<size_t>(via[static_cast<size_t>(v)]);
        residual_[a] -= bottleneck;
        residual_[a ^ 1] += bottleneck;
      }
    }
  }

  // Nodes reachable from `source` in the residual network.
  std::vector<bool> reachable(int source) const {
    std::vector<int> via = search(source);
    std::vector<bool> seen(via.size());
    for (size_t v = 0; v < via.size(); ++v) seen[v] = via[v] >= 0 || static_cast<int>(v) == source;
    return seen;
  }

 private:
  // Breadth-first search; via[v] is the residual arc entering v, -1 if unseen.
  std::vector<int> search(int source) const {
    std::vector<int> via(out_.size(), -1);
    std::vector<bool> seen(out_.size(), false);
    seen[static_cast<size_t>(source)] = true;
    std::deque<int> queue{source};
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (int a : out_[static_cast<size_t>(v)]) {
        int w = head_[static_cast<size_t>(a)];
        if (seen[static_cast<size_t>(w)] || residual_[static_cast<size_t>(a)].sign() <= 0) continue;
        seen[static_cast<size_t>(w)] = true;
        via[static_cast<size_t>(w)] = a;
        queue.push_back(w);
      }
    }
    return via;
  }

  std::vector<int> head_;
  std::vector<Rational> residual_;
  std::vector<std::vector<int>> out_;
};

}  // namespace

BalanceFlowResult construct_bidirected_balance_flow(const Graph& g, const EdgeValues& u, const VertexValues& b) {
  const int n = g.num_vertices();
  if (static_cast<int>(u.size()) != g.num_edges()) throw SolutionError("u does not match the graph");
  if (static_cast<int>(b.size()) != n) throw SolutionError("b does not match the graph");
  Rational total;
  for (const Rational& x : b) total += x;
  if (!total.is_zero()) throw SolutionError("balances sum to " + total.to_string() + ", expected 0");
  for (const Rational& x : u) {
    if (x.sign() < 0) throw SolutionError("negative edge capacity");
  }

  const int source = n;
  const int sink = n + 1;
  FlowNetwork net(n + 2);
  std::vector<int> arc_of(static_cast<size_t>(g.num_arcs()));
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    DirectedEdge d = g.arc(a);
    arc_of[static_cast<size_t>(a)] = net.add_arc(d.tail, d.head, u[static_cast<size_t>(Graph::arc_edge(a))]);
  }
  Rational supply;
  for (VertexId v = 0; v < n; ++v) {
    const Rational& bv = b[static_cast<size_t>(v)];
    if (bv.sign() > 0) {
      net.add_arc(source, v, bv);
      supply += bv;
    } else if (bv.sign() < 0) {
      net.add_arc(v, sink, -bv);
    }
  }
  net.max_flow(source, sink);

  std::vector<bool> side = net.reachable(source);
  if (side[static_cast<size_t>(sink)]) throw SolutionError("max-flow did not terminate at a minimum cut");
  BalanceFlowResult result;
  // Capacity of the minimum cut separating the source side from the sink.
  Rational cut;
  for (VertexId v = 0; v < n; ++v) {
    const Rational& bv = b[static_cast<size_t>(v)];
    if (side[static_cast<size_t>(v)]) {
      result.witness.push_back(v);
      if (bv.sign() < 0) cut -= bv;
    } else if (bv.sign() > 0) {
      cut += bv;
    }
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (side[static_cast<size_t>(g.edge(e).u)] != side[static_cast<size_t>(g.edge(e).v)]) cut += u[static_cast<size_t>(e)];
  }
  if (cut < supply) {
    result.feasible = false;
    return result;
  }
  result.feasible = true;
  result.witness.clear();
  result.flow.assign(static_cast<size_t>(g.num_arcs()), Rational(0));
  for (ArcId a = 0; a < g.num_arcs(); ++a) {
    Rational forward = net.flow(arc_of[static_cast<size_t>(a)]);
    Rational backward = net.flow(arc_of[static_cast<size_t>(Graph::reverse(a))]);
    result.flow[static_cast<size_t>(a)] = max(forward - backward, Rational(0));
  }
  return result;
}

std::string check_balance_flow(const Graph& g, const EdgeValues& u, const VertexValues& b, const ArcValues& f) {
  if (static_cast<int>(u.size()) != g.num_edges()) return "usage vector does not match the graph";
  if (static_cast<int>(b.size()) != g.num_vertices()) return "balance vector does not match the graph";
  if (static_cast<int>(f.size()) != g.num_arcs()) return "flow vector does not match the graph";
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Rational& forward = f[static_cast<size_t>(2 * e)];
    const Rational& backward = f[static_cast<size_t>(2 * e + 1)];
    if (forward.sign() < 0 || backward.sign() < 0) return "negative flow on edge " + std::to_string(e);
    if (forward + backward > u[static_cast<size_t>(e)]) {
      return "edge " + std::to_string(e) + " carries " + (forward + backward).to_string() + " above usage " +
             u[static_cast<size_t>(e)].to_string();
    }
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    Rational net;
    for (ArcId a : g.out_arcs(v)) net += f[static_cast<size_t>(a)];
    for (ArcId a : g.in_arcs(v)) net -= f[static_cast<size_t>(a)];
    if (net != b[static_cast<size_t>(v)]) {
      return "vertex " + std::to_string(v) + " has net outflow " + net.to_string() + " instead of " +
             b[static_cast<size_t>(v)].to_string();
    }
  }
  return "";
}

}  // namespace steiner_gap
