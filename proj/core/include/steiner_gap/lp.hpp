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

#ifndef STEINER_GAP_LP_HPP_
#define STEINER_GAP_LP_HPP_

#include <chrono>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "steiner_gap/rational.hpp"

namespace steiner_gap {

enum class VariableKind { EdgeUsage, RootFlow, CommodityFlow, Balance, Inclusion, Auxiliary };

// Identifies an LP column by its role. `index` is an edge, arc or vertex id
// depending on the kind; `terminal` is the commodity (or flow owner) vertex
// for CommodityFlow and -1 otherwise.
struct VariableKey {
  VariableKind kind = VariableKind::Auxiliary;
  int index = 0;
  int terminal = -1;

  static VariableKey edge_usage(int edge) { return {VariableKind::EdgeUsage, edge, -1}; }
  static VariableKey root_flow(int arc) { return {VariableKind::RootFlow, arc, -1}; }
  static VariableKey commodity_flow(int terminal, int arc) {
    return {VariableKind::CommodityFlow, arc, terminal};
  }
  static VariableKey balance(int vertex) { return {VariableKind::Balance, vertex, -1}; }
  static VariableKey inclusion(int vertex) { return {VariableKind::Inclusion, vertex, -1}; }
  static VariableKey auxiliary(int id) { return {VariableKind::Auxiliary, id, -1}; }

  friend bool operator==(const VariableKey&, const VariableKey&) = default;
};

struct VariableKeyHash {
  std::size_t operator()(const VariableKey& k) const {
    return (static_cast<std::size_t>(k.kind) * 1000003u) ^
           (static_cast<std::size_t>(k.index) * 7919u) ^
           static_cast<std::size_t>(k.terminal + 1);
  }
};

enum class Sense { LessEqual, Equal, GreaterEqual };

struct Term {
  int column;
  Rational coefficient;
};

struct LpVariable {
  VariableKey key;
  std::optional<Rational> lower;  // nullopt means -infinity
  std::optional<Rational> upper;  // nullopt means +infinity
  std::string name;
};

struct LpConstraint {
  std::vector<Term> terms;
  Sense sense = Sense::LessEqual;
  Rational rhs;
  std::string name;
};

class LpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Minimization LP with bounded columns and sparse rows.
class RationalLp {
 public:
  int add_variable(const VariableKey& key, std::optional<Rational> lower,
                   std::optional<Rational> upper, std::string name = "");
  // Duplicate columns within one row are merged; zero coefficients dropped.
  int add_constraint(std::vector<Term> terms, Sense sense, const Rational& rhs,
                     std::string name = "");
  void set_objective(int column, const Rational& coefficient);
  void set_lower(int column, std::optional<Rational> lower);
  void set_upper(int column, std::optional<Rational> upper);

  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_constraints() const { return static_cast<int>(constraints_.size()); }
  const LpVariable& variable(int column) const { return variables_.at(static_cast<size_t>(column)); }
  const LpConstraint& constraint(int row) const { return constraints_.at(static_cast<size_t>(row)); }
  const std::vector<LpVariable>& variables() const { return variables_; }
  const std::vector<LpConstraint>& constraints() const { return constraints_; }
  const std::vector<Rational>& objective() const { return objective_; }

  std::optional<int> find(const VariableKey& key) const;
  int column(const VariableKey& key) const;

  // Row activity a_i x for a full column vector.
  Rational row_activity(int row, const std::vector<Rational>& x) const;
  Rational objective_value(const std::vector<Rational>& x) const;

 private:
  std::vector<LpVariable> variables_;
  std::vector<LpConstraint> constraints_;
  std::vector<Rational> objective_;
  std::unordered_map<VariableKey, int, VariableKeyHash> index_;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };
std::string to_string(LpStatus status);

struct LpOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::vector<Rational> values;   // per column (feasible point when Unbounded)
  Rational objective;
  std::vector<Rational> duals;    // per row; y = c_B B^{-1}
  // Infeasible: row multipliers proving infeasibility. Unbounded: an
  // improving recession direction per column.
  std::vector<Rational> farkas;
  std::vector<Rational> ray;
  int iterations = 0;
  bool warm_started = false;

  const Rational& value(const RationalLp& lp, const VariableKey& key) const {
    return values.at(static_cast<size_t>(lp.column(key)));
  }
};

struct FloatOutcome {
  LpStatus status = LpStatus::Infeasible;
  std::vector<double> values;
  double objective = 0.0;
  std::vector<double> duals;
  double max_violation = 0.0;  // worst row or bound violation of `values`
  double bound_gap = 0.0;      // |primal objective - dual objective|
  double dual_infeasibility = 0.0;
  int iterations = 0;
};

class NumericalFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SolveOptions {
  // Exact solves first run the double-precision simplex and then crash the
  // exact solver into the resulting basis.
  bool float_warm_start = true;
  // Consecutive degenerate pivots tolerated under largest-coefficient
  // pricing before switching to the smallest-index rule.
  int degenerate_switch = 50;
  long max_iterations = 10'000'000;
  // The double-precision simplex widens every finite bound by a random
  // relative amount of this order to break degenerate ties, then restores
  // the bounds and repairs feasibility with dual simplex pivots. 0 disables.
  double perturbation = 1e-6;
  // Solves past this instant throw SolveTimeout.
  std::optional<std::chrono::steady_clock::time_point> deadline;
};

class SolveTimeout : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

LpOutcome solve_exact(const RationalLp& lp, const SolveOptions& options = {});
// Throws NumericalFailure if the final primal violation or duality gap
// exceeds `tolerance` (gap relative to 1 + |objective|).
FloatOutcome solve_float(const RationalLp& lp, double tolerance, const SolveOptions& options = {});

// Exact optimality check: primal feasibility, dual sign feasibility,
// complementary slackness and equal objectives. `reason` receives the first
// failed condition.
bool verify_certificate(const RationalLp& lp, const LpOutcome& outcome,
                        std::string* reason = nullptr);
// Exact check that `outcome.farkas` proves infeasibility.
bool verify_infeasibility(const RationalLp& lp, const LpOutcome& outcome,
                          std::string* reason = nullptr);
// Exact check that `outcome.values` is feasible and `outcome.ray` is an
// improving recession direction.
bool verify_unboundedness(const RationalLp& lp, const LpOutcome& outcome,
                          std::string* reason = nullptr);

// CPLEX LP text. Coefficients are decimal expansions with 30 digits.
void write_lp_format(const RationalLp& lp, std::ostream& out, const std::string& title = "");

}  // namespace steiner_gap

#endif  // STEINER_GAP_LP_HPP_
