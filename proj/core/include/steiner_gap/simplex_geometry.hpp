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

#ifndef STEINER_GAP_SIMPLEX_GEOMETRY_HPP_
#define STEINER_GAP_SIMPLEX_GEOMETRY_HPP_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace steiner_gap {

// A point of the discrete simplex: d+1 nonnegative integer coordinates.
struct SimplexPoint {
  std::vector<int> coords;

  int dim() const { return static_cast<int>(coords.size()) - 1; }
  int size() const;
  int operator[](int i) const { return coords[static_cast<size_t>(i)]; }
  int max_coord() const;
  std::string to_string() const;

  friend auto operator<=>(const SimplexPoint&, const SimplexPoint&) = default;
  friend bool operator==(const SimplexPoint&, const SimplexPoint&) = default;
};

// s * e_i in dimension d.
SimplexPoint corner(int d, int s, int i);

// All points of the discrete simplex of dimension d and size s, in
// lexicographic order. Iterative, so d and s are bounded only by memory.
std::vector<SimplexPoint> enumerate_simplex(int d, int s);

std::vector<int> support(const SimplexPoint& p);
// |support| - 1. Throws std::invalid_argument for the all-zero point.
int level(const SimplexPoint& p);

int l1_distance(const SimplexPoint& a, const SimplexPoint& b);

// Binomial coefficient, zero for k < 0 or k > n (so also zero for n < 0).
int64_t binomial(int64_t n, int64_t k);

int64_t count_simplex(int d, int s);
// Points with every coordinate at most k. Requires 2k + 1 >= s.
int64_t count_radius(int d, int s, int k);
// Points of level l with every coordinate at most k. Requires 2k + 1 >= s.
int64_t count_radius_level(int d, int s, int k, int l);

// x -> { x_1 + ... + x_k + k : k = 1..d }, a d-subset of {1, ..., d+s}.
std::vector<int> point_subset_bijection(const SimplexPoint& p);
// Inverse of point_subset_bijection. Throws std::invalid_argument unless
// `subset` is a strictly increasing list of d values in {1, ..., d+s}.
SimplexPoint subset_to_point(const std::vector<int>& subset, int d, int s);

}  // namespace steiner_gap

#endif  // STEINER_GAP_SIMPLEX_GEOMETRY_HPP_
