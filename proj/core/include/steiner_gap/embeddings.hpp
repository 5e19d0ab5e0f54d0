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


#ifndef STEINER_GAP_EMBEDDINGS_HPP_
#define STEINER_GAP_EMBEDDINGS_HPP_

#include <stdexcept>
#include <vector>

#include "steiner_gap/graph.hpp"
#include "steiner_gap/instances.hpp"
#include "steiner_gap/rational.hpp"

namespace steiner_gap {

class EmbeddingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Map of every vertex to a nonnegative vector with one coordinate per
// required vertex, plus the declared simplex size.
struct SimplexEmbedding {
  std::vector<std::vector<Rational>> y;  // indexed by vertex
  Rational size;
  // Coordinate of each required vertex, in the order of inst.required.
  // Empty means: read it from the corner labels of the instance.
  std::vector<int> terminal_dims;
};

// Coordinate of each required vertex. Throws EmbeddingError unless the map
// is a bijection onto 0..|R|-1.
std::vector<int> terminal_dimensions(const SteinerInstance& inst, const SimplexEmbedding& emb);

// Feasibility for the simplex embedding LP. With `above`, Steiner vertices
// may sit on any simplex of size at least emb.size.
bool verify_se(const SteinerInstance& inst, const SimplexEmbedding& emb, bool above,
               std::string* reason = nullptr);

// 2 * (sum_i y(r_i)_i - size).
Rational se_objective(const SteinerInstance& inst, const SimplexEmbedding& emb);

// Every vertex at its SimplexPoint label, size taken from the corners.
SimplexEmbedding canonical_embedding(const SteinerInstance& inst);

// sum over edges of c * |x(v) - x(w)|_1 / 2 for a three-terminal embedding
// into the unit simplex with x(r_i) = e_i.
Rational ckr_objective(const SteinerInstance& inst, const SimplexEmbedding& x);

// Embedding of gen_multiway_dual(s, delta) at x(v) = v / (2s - 3 delta + 1).
SimplexEmbedding ckr_canonical_for_dual(int s, int delta);
SimplexEmbedding ckr_canonical_for_dual(const SteinerInstance& dual, int s, int delta);

// Worst-case ratio of the canonical dual embeddings, piecewise in q mod 3.
Rational ckr_gap_formula(int q);

}  // namespace steiner_gap

#endif  // STEINER_GAP_EMBEDDINGS_HPP_
