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

#ifndef STEINER_GAP_INSTANCES_HPP_
#define STEINER_GAP_INSTANCES_HPP_

#include <string>
#include <vector>

#include "steiner_gap/graph.hpp"

namespace steiner_gap {

// Unit-cost graph on the simplex of size s and the points of the simplex of
// size s+1 with all coordinates at most s. Required: the corners s * e_i.
SteinerInstance gen_simplex_instance(int d, int s);

// Core of radius s - delta plus one antenna edge of cost 2 * delta from each
// corner s * e_i to every core point of the size-s layer with coordinate
// i equal to s - delta. Requires 1 <= delta and 2 * delta <= s.
SteinerInstance gen_simplified_simplex_instance(int d, int s, int delta);

// The simplified instance with each corner split into the auxiliary set
// aux_sets[i] = { v in layer s+1 : v_i = s - delta + 1 }.
struct SplitGraph {
  int d = 0;
  int s = 0;
  int delta = 0;
  Graph graph;
  std::vector<std::vector<VertexId>> aux_sets;
  std::vector<int> aux_owner;  // corner index per vertex, -1 for core vertices
};

SplitGraph gen_split_simplified_graph(int d, int s, int delta);
// Contracts every auxiliary set to one required vertex. Equal to
// gen_simplified_simplex_instance up to vertex numbering.
SteinerInstance contract_split_graph(const SplitGraph& split);

// Goemans' gadget instance: root r, terminals s_i, and for every pair i < j
// the vertices b_ij, c_ij joined to a_i and a_j.
SteinerInstance gen_goemans_instance(int d);

// Cost-preserving topological minor embedding: every vertex of the small
// graph maps to a vertex of the large one and every edge to a path whose
// total cost equals the edge cost. Paths are internally disjoint and avoid
// the vertex images.
struct MinorMap {
  std::vector<VertexId> vertex_image;
  std::vector<std::vector<VertexId>> edge_paths;
};

MinorMap goemans_minor_map(const SteinerInstance& goemans, const SteinerInstance& simplex);
// Returns an empty string on success, otherwise a description of the defect.
std::string check_minor_map(const SteinerInstance& small, const SteinerInstance& large,
                            const MinorMap& map);

// Level of an edge of a simplex instance: the larger endpoint level.
int edge_level(const Graph& g, EdgeId e);

// Simplex instance without edges above level lmax; isolated Steiner
// vertices are dropped. Throws InstanceError if the result is disconnected.
SteinerInstance gen_level_restricted(int d, int s, int lmax);

// Planar dual of the two-dimensional simplified instance, used as a
// three-terminal multiway cut instance. Corners sit at (2s - 3 delta + 1) e_i.
SteinerInstance gen_multiway_dual(int s, int delta);

// Corner index i of a required vertex labelled with a corner point, or -1.
int corner_index(const SteinerInstance& inst, VertexId v);

}  // namespace steiner_gap

#endif  // STEINER_GAP_INSTANCES_HPP_
