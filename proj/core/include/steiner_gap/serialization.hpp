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


#ifndef STEINER_GAP_SERIALIZATION_HPP_
#define STEINER_GAP_SERIALIZATION_HPP_

#include <stdexcept>
#include <string>

#include "steiner_gap/embeddings.hpp"
#include "steiner_gap/formulations.hpp"
#include "steiner_gap/graph.hpp"
#include "steiner_gap/oracles.hpp"
#include "steiner_gap/solutions.hpp"

namespace steiner_gap {

// All JSON documents store rationals as "p/q" strings. Text in and out is
// JSON; the JSON library stays an implementation detail.
class SerializationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Label sidecar: {"name", "labels": [per vertex]}.
std::string labels_to_json(const SteinerInstance& inst);
// Replaces labels and name; the vertex count must match.
void apply_labels_json(SteinerInstance& inst, const std::string& text);

// {"formulation", "plus", "root", "objective", "values": {name: "p/q"}},
// listing nonzero values only. Names are the LP column names.
std::string solution_to_json(const SteinerInstance& inst, const FormulationKind& kind,
                             const FormulationSolution& sol);
struct ParsedSolution {
  FormulationKind kind;
  FormulationSolution solution;
};
ParsedSolution solution_from_json(const SteinerInstance& inst, const std::string& text);

// {"size", "terminal_dims", "y": {vertex id: ["p/q", ...]}}.
std::string embedding_to_json(const SimplexEmbedding& emb);
SimplexEmbedding embedding_from_json(const std::string& text);

// Array of element arrays.
std::string set_family_to_json(const SetFamily& family);
SetFamily set_family_from_json(const std::string& text);

}  // namespace steiner_gap

#endif  // STEINER_GAP_SERIALIZATION_HPP_
