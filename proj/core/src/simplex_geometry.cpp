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

#include "steiner_gap/simplex_geometry.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>

namespace steiner_gap {

int SimplexPoint::size() const {
  return std::accumulate(coords.begin(), coords.end(), 0);
}

int SimplexPoint::max_coord() const {
  return coords.empty() ? 0 : *std::max_element(coords.begin(), coords.end());
}

std::string SimplexPoint::to_string() const {
  std::string out = "(";
  for (size_t i = 0; i < coords.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(coords[i]);
  }
  return out + ")";
}

SimplexPoint corner(int d, int s, int i) {
  if (i < 0 || i > d) throw std::out_of_range("corner: index out of range");
  SimplexPoint p{std::vector<int>(static_cast<size_t>(d) + 1, 0)};
  p.coords[static_cast<size_t>(i)] = s;
  return p;
}

std::vector<SimplexPoint> enumerate_simplex(int d, int s) {
  if (d < 0 || s < 0) throw std::invalid_argument("enumerate_simplex: d, s >= 0");
  std::vector<SimplexPoint> out;
  std::vector<int> x(static_cast<size_t>(d) + 1, 0);
  x[static_cast<size_t>(d)] = s;
  while (true) {
    out.push_back(SimplexPoint{x});
    // Advance to the lexicographic successor: bump the last position before
    // a nonzero tail and move the rest of the tail to the final slot.
    int tail = x[static_cast<size_t>(d)];
    int i = d - 1;
    while (i >= 0 && tail == 0) {
      tail += x[static_cast<size_t>(i)];
      --i;
    }
    if (i < 0) break;
    ++x[static_cast<size_t>(i)];
    for (int j = i + 1; j < d; ++j) x[static_cast<size_t>(j)] = 0;
    x[static_cast<size_t>(d)] = tail - 1;
  }
  return out;
}

std::vector<int> support(const SimplexPoint& p) {
  std::vector<int> out;
  for (int i = 0; i <= p.dim(); ++i) {
    if (p[i] > 0) out.push_back(i);
  }
  return out;
}

int level(const SimplexPoint& p) {
  auto supp = support(p);
  if (supp.empty()) throw std::invalid_argument("level: zero point has no level");
  return static_cast<int>(supp.size()) - 1;
}

int l1_distance(const SimplexPoint& a, const SimplexPoint& b) {
  if (a.coords.size() != b.coords.size()) {
    throw std::invalid_argument("l1_distance: dimension mismatch");
  }
  int dist = 0;
  for (size_t i = 0; i < a.coords.size(); ++i) {
    dist += std::abs(a.coords[i] - b.coords[i]);
  }
  return dist;
}

int64_t binomial(int64_t n, int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  __int128 result = 1;
  for (int64_t i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
    if (result > INT64_MAX) throw std::overflow_error("binomial overflow");
  }
  return static_cast<int64_t>(result);
}

int64_t count_simplex(int d, int s) {
  if (d < 0 || s < 0) throw std::invalid_argument("count_simplex: d, s >= 0");
  return binomial(d + s, d);
}

int64_t count_radius(int d, int s, int k) {
  if (d < 0 || s < 0 || k < 0 || 2 * k + 1 < s) {
    throw std::invalid_argument("count_radius: requires 2k + 1 >= s");
  }
  return binomial(d + s, d) -
         static_cast<int64_t>(d + 1) * binomial(d + s - (k + 1), d);
}

int64_t count_radius_level(int d, int s, int k, int l) {
  if (d < 0 || s < 0 || k < 0 || l < 0 || 2 * k + 1 < s) {
    throw std::invalid_argument("count_radius_level: requires 2k + 1 >= s");
  }
  return binomial(d + 1, l + 1) *
         (binomial(s - 1, l) - static_cast<int64_t>(l + 1) * binomial(s - 1 - k, l));
}

std::vector<int> point_subset_bijection(const SimplexPoint& p) {
  std::vector<int> out;
  int prefix = 0;
  for (int k = 1; k <= p.dim(); ++k) {
    prefix += p[k - 1];
    out.push_back(prefix + k);
  }
  return out;
}

SimplexPoint subset_to_point(const std::vector<int>& subset, int d, int s) {
  if (d < 0 || s < 0 || static_cast<int>(subset.size()) != d) {
    throw std::invalid_argument("subset_to_point: expected a d-subset");
  }
  SimplexPoint p{std::vector<int>(static_cast<size_t>(d) + 1, 0)};
  int previous = 0;
  int used = 0;
  for (int k = 0; k < d; ++k) {
    int a = subset[static_cast<size_t>(k)];
    if (a <= previous || a > d + s) {
      throw std::invalid_argument("subset_to_point: not an increasing subset of [d+s]");
    }
    p.coords[static_cast<size_t>(k)] = a - previous - 1;
    used += a - previous - 1;
    previous = a;
  }
  p.coords[static_cast<size_t>(d)] = s - used;
  return p;
}

}  // namespace steiner_gap
