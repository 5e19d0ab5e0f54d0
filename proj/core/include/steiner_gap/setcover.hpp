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


#ifndef STEINER_GAP_SETCOVER_HPP_
#define STEINER_GAP_SETCOVER_HPP_

#include <map>
#include <stdexcept>
#include <vector>

#include "steiner_gap/graph.hpp"
#include "steiner_gap/oracles.hpp"
#include "steiner_gap/rational.hpp"
#include "steiner_gap/solutions.hpp"

namespace steiner_gap {

class SetCoverError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Family of nonempty element sets. Elements are arbitrary integers; every
// set is stored sorted and duplicate-free.
class SetCoverInstance {
 public:
  SetCoverInstance() = default;
  // Throws SetCoverError on an empty family or an empty set.
  explicit SetCoverInstance(SetFamily sets);

  const SetFamily& sets() const { return sets_; }
  const std::vector<int>& universe() const { return universe_; }
  int frequency(int element) const;
  int min_frequency() const;
  int num_sets() const { return static_cast<int>(sets_.size()); }
  int universe_size() const { return static_cast<int>(universe_.size()); }

 private:
  SetFamily sets_;
  std::vector<int> universe_;  // sorted
  std::map<int, int> frequency_;
};

// S_x = { y in {0,1}^n \ {0} : x . y odd } for every nonzero x, with
// vectors encoded as the integers 1 .. 2^n - 1.
SetCoverInstance gen_skutella_family(int n);

// Layered graph: root on level 0, (word, set) on levels 1..p, (word,
// element) on level p+1, unit costs. Required: root and level p+1. The
// extended variant hangs a pendant root r' off the root and requires r'
// instead.
SteinerInstance gen_sci(const SetCoverInstance& family, int p, bool extended = false);

// Integral optimum of the layered instance for a minimum cover of the
// given size: (1 + cover/(|U|-1)) (|U|^p - 1) + 1.
Rational sci_opt_formula(const SetCoverInstance& family, int p, int cover_size);

// Keeps, for every element, the first min-frequency many sets containing
// it; drops the element from the remaining sets and discards empty sets.
SetCoverInstance equalize_frequency(const SetCoverInstance& family);

// Fractional MCFR solution rooted at the root (r' when extended) on
// gen_sci(equalize_frequency(family), p, extended).
McfrSolution sci_fractional_solution(const SetCoverInstance& family, int p, bool extended = false);
// |U|^p + (|S|/f) (|U|^p - 1)/(|U| - 1) for the equalized family.
Rational sci_fractional_objective(const SetCoverInstance& family, int p);

// Fractional upper bound with |S| / min frequency of the original family.
Rational sci_fractional_bound(const SetCoverInstance& family, int p);
// sci_opt_formula over sci_fractional_bound with an exact minimum cover.
Rational sci_gap_bound(const SetCoverInstance& family, int p);
// (|U| - 1 + |I|) / (|U| - 1 + |S| / min frequency).
Rational sci_gap_limit(const SetCoverInstance& family);

}  // namespace steiner_gap

#endif  // STEINER_GAP_SETCOVER_HPP_
