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

#ifndef STEINER_GAP_FORMULATIONS_HPP_
#define STEINER_GAP_FORMULATIONS_HPP_

#include <stdexcept>
#include <string>
#include <vector>

#include "steiner_gap/graph.hpp"
#include "steiner_gap/lp.hpp"

namespace steiner_gap {

// Bidirected cut, multi-commodity flow, multi balance flow, multi balance
// cut and subtour elimination relaxations.
enum class BaseFormulation { BCR, MCFR, MBFR, MBCR, STER };

std::string to_string(BaseFormulation base);
BaseFormulation parse_base_formulation(const std::string& text);
bool uses_root(BaseFormulation base);
bool is_explicit_cut(BaseFormulation base);

struct FormulationKind {
  BaseFormulation base = BaseFormulation::MCFR;
  // Adds the Steiner-vertex degree constraints.
  bool plus = false;
  // Root for BCR and MCFR; ignored otherwise. -1 selects the default root.
  VertexId root = -1;
};

std::string to_string(const FormulationKind& kind);

// Explicit cut formulations enumerate all vertex subsets.
inline constexpr int kExplicitVertexLimit = 16;

class VertexLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FormulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CompiledLp {
  RationalLp lp;
  FormulationKind kind;
  // Borrowed; must outlive the compiled LP.
  const SteinerInstance* instance = nullptr;
  std::vector<int> valid_groups;
};

// Column names: u(a,b), f(a>b), g(s:a>b), f(r:a>b), b(v), y(v).
std::string variable_name(const Graph& g, BaseFormulation base, const VariableKey& key);

CompiledLp compile_mcfr(const SteinerInstance& inst, VertexId root, bool plus);
CompiledLp compile_mbfr(const SteinerInstance& inst, bool plus);
CompiledLp compile_bcr_explicit(const SteinerInstance& inst, VertexId root, bool plus);
CompiledLp compile_mbcr_explicit(const SteinerInstance& inst, bool plus);
CompiledLp compile_ster_explicit(const SteinerInstance& inst, bool plus);
CompiledLp compile(const SteinerInstance& inst, const FormulationKind& kind);

// Appends valid inequality group 1 or 2. Group 2 ranges over Steiner vertex
// sets X with 2 <= |X| <= max_subset_size.
CompiledLp add_valid_constraints(CompiledLp compiled, int group, int max_subset_size = 3);

// Subsets of `pool` with 2 <= size <= limit, in lexicographic order.
std::vector<std::vector<VertexId>> subsets_up_to(const std::vector<VertexId>& pool, int limit);

}  // namespace steiner_gap

#endif  // STEINER_GAP_FORMULATIONS_HPP_
