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


#ifndef STEINER_GAP_ORACLES_HPP_
#define STEINER_GAP_ORACLES_HPP_

#include <stdexcept>
#include <vector>

#include "steiner_gap/graph.hpp"
#include "steiner_gap/graph_algorithms.hpp"

namespace steiner_gap {

class SizeLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDreyfusWagnerTerminalLimit = 10;
inline constexpr int kEnumerationSteinerLimit = 20;
inline constexpr int kMultiwaySteinerLimit = 12;
inline constexpr int kSetCoverFamilyLimit = 24;

struct SteinerOracleResult {
  Rational optimum;
  TreeSolution tree;  // optimal, all leaves required
};

// Dreyfus-Wagner when |R| <= 10, otherwise subset enumeration when at most
// 20 vertices are not required.
SteinerOracleResult exact_steiner_tree(const SteinerInstance& inst);
// Dynamic program over terminal subsets.
SteinerOracleResult steiner_tree_dreyfus_wagner(const SteinerInstance& inst);
// Minimum spanning tree of G[R + X] over all Steiner vertex sets X.
SteinerOracleResult steiner_tree_by_enumeration(const SteinerInstance& inst);

// Minimum spanning tree on R in the metric closure, expanded to paths.
// Cost at most twice the optimum.
SteinerOracleResult mst_two_approx(const SteinerInstance& inst);

struct MultiwayCutResult {
  Rational optimum;
  // Terminal index (position in inst.required) of every vertex's side.
  std::vector<int> labeling;
};

// Enumerates the assignments of non-required vertices to terminals; the cut
// consists of the edges whose endpoints get different labels.
MultiwayCutResult exact_multiway_cut(const SteinerInstance& inst);
// Cost of the edges joining differently labelled vertices.
Rational multiway_cut_cost(const Graph& g, const std::vector<int>& labeling);

using SetFamily = std::vector<std::vector<int>>;

struct SetCoverResult {
  int size = 0;
  std::vector<int> chosen;  // indices into the family, lexicographically first
};

// Minimum number of sets covering the union of the family.
SetCoverResult exact_set_cover(const SetFamily& family);

}  // namespace steiner_gap

#endif  // STEINER_GAP_ORACLES_HPP_
