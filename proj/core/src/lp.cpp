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

#include "steiner_gap/lp.hpp"

#include <algorithm>
#include <cctype>
#include <map>

namespace steiner_gap {

int RationalLp::add_variable(const VariableKey& key, std::optional<Rational> lower,
                             std::optional<Rational> upper, std::string name) {
  if (index_.count(key)) throw LpError("duplicate variable key: " + name);
  if (lower && upper && *upper < *lower) throw LpError("empty bound interval: " + name);
  int column = num_variables();
  if (name.empty()) name = "x" + std::to_string(column);
  variables_.push_back(LpVariable{key, std::move(lower), std::move(upper), std::move(name)});
  objective_.emplace_back();
  index_.emplace(key, column);
  return column;
}

int RationalLp::add_constraint(std::vector<Term> terms, Sense sense, const Rational& rhs,
                               std::string name) {
  std::map<int, Rational> merged;
  for (auto& t : terms) {
    if (t.column < 0 || t.column >= num_variables()) {
      throw LpError("constraint references an undeclared variable");
    }
    merged[t.column] += t.coefficient;
  }
  LpConstraint row;
  for (auto& [col, coef] : merged) {
    if (!coef.is_zero()) row.terms.push_back(Term{col, coef});
  }
  row.sense = sense;
  row.rhs = rhs;
  row.name = name.empty() ? "c" + std::to_string(num_constraints()) : std::move(name);
  constraints_.push_back(std::move(row));
  return num_constraints() - 1;
}

void RationalLp::set_objective(int column, const Rational& coefficient) {
  objective_.at(static_cast<size_t>(column)) = coefficient;
}

void RationalLp::set_lower(int column, std::optional<Rational> lower) {
  variables_.at(static_cast<size_t>(column)).lower = std::move(lower);
}

void RationalLp::set_upper(int column, std::optional<Rational> upper) {
  variables_.at(static_cast<size_t>(column)).upper = std::move(upper);
}

std::optional<int> RationalLp::find(const VariableKey& key) const {
  auto it = index_.find(key);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int RationalLp::column(const VariableKey& key) const {
  auto c = find(key);
  if (!c) throw LpError("unknown variable key");
  return *c;
}

Rational RationalLp::row_activity(int row, const std::vector<Rational>& x) const {
  Rational sum;
  for (const auto& t : constraint(row).terms) sum += t.coefficient * x[static_cast<size_t>(t.column)];
  return sum;
}

Rational RationalLp::objective_value(const std::vector<Rational>& x) const {
  Rational sum;
  for (int j = 0; j < num_variables(); ++j) {
    if (!objective_[static_cast<size_t>(j)].is_zero()) sum += objective_[static_cast<size_t>(j)] * x[static_cast<size_t>(j)];
  }
  return sum;
}

std::string to_string(LpStatus status) {
  switch (status) {
    case LpStatus::Optimal: return "Optimal";
    case LpStatus::Infeasible: return "Infeasible";
    case LpStatus::Unbounded: return "Unbounded";
  }
  return "Unknown";
}

namespace {

bool fail(std::string* reason, const std::string& text) {
  if (reason) *reason = text;
  return false;
}

bool row_satisfied(Sense sense, const Rational& activity, const Rational& rhs) {
  switch (sense) {
    case Sense::LessEqual: return activity <= rhs;
    case Sense::GreaterEqual: return activity >= rhs;
    case Sense::Equal: return activity == rhs;
  }
  return false;
}

bool primal_feasible(const RationalLp& lp, const std::vector<Rational>& x, std::string* reason) {
  if (static_cast<int>(x.size()) != lp.num_variables()) return fail(reason, "value vector size mismatch");
  for (int j = 0; j < lp.num_variables(); ++j) {
    const auto& v = lp.variable(j);
    const Rational& xj = x[static_cast<size_t>(j)];
    if (v.lower && xj < *v.lower) return fail(reason, "lower bound violated by " + v.name);
    if (v.upper && xj > *v.upper) return fail(reason, "upper bound violated by " + v.name);
  }
  for (int i = 0; i < lp.num_constraints(); ++i) {
    const auto& row = lp.constraint(i);
    if (!row_satisfied(row.sense, lp.row_activity(i, x), row.rhs)) {
      return fail(reason, "constraint violated: " + row.name);
    }
  }
  return true;
}

// A^T y per column.
std::vector<Rational> transpose_times(const RationalLp& lp, const std::vector<Rational>& y) {
  std::vector<Rational> out(static_cast<size_t>(lp.num_variables()));
  for (int i = 0; i < lp.num_constraints(); ++i) {
    const Rational& yi = y[static_cast<size_t>(i)];
    if (yi.is_zero()) continue;
    for (const auto& t : lp.constraint(i).terms) out[static_cast<size_t>(t.column)] += yi * t.coefficient;
  }
  return out;
}

// True if y proves that no x in the bound box satisfies every row. Rows are
// aggregated as sum_i y_i a_i x <= sum_i y_i b_i, which requires the sign of
// y_i to match the row sense.
bool farkas_direction_ok(const RationalLp& lp, const std::vector<Rational>& y) {
  Rational rhs;
  for (int i = 0; i < lp.num_constraints(); ++i) {
    const auto& row = lp.constraint(i);
    const Rational& yi = y[static_cast<size_t>(i)];
    if (row.sense == Sense::LessEqual && yi.sign() < 0) return false;
    if (row.sense == Sense::GreaterEqual && yi.sign() > 0) return false;
    rhs += yi * row.rhs;
  }
  // Every feasible x satisfies coef x <= rhs, so a box infimum above rhs
  // rules out all of them.
  std::vector<Rational> coef = transpose_times(lp, y);
  Rational inf;
  for (int j = 0; j < lp.num_variables(); ++j) {
    const Rational& c = coef[static_cast<size_t>(j)];
    const auto& v = lp.variable(j);
    if (c.sign() > 0) {
      if (!v.lower) return false;
      inf += c * *v.lower;
    } else if (c.sign() < 0) {
      if (!v.upper) return false;
      inf += c * *v.upper;
    }
  }
  return inf > rhs;
}

std::string lp_name(const std::string& raw) {
  std::string out;
  for (char c : raw) {
    out.push_back(std::isalnum(static_cast<unsigned char>(c)) || c == '_' ? c : '_');
  }
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out[0]))) out.insert(0, "v");
  return out;
}

std::string lp_number(const Rational& r) {
  if (r.is_integer()) return r.to_string();
  std::string text = r.to_decimal(30, false);
  while (!text.empty() && text.back() == '0') text.pop_back();
  if (!text.empty() && text.back() == '.') text.pop_back();
  return text;
}

void write_terms(std::ostream& out, const std::vector<Term>& terms,
                 const std::vector<std::string>& names) {
  if (terms.empty()) {
    out << " 0" << (names.empty() ? std::string() : " " + names.front());
    return;
  }
  int count = 0;
  for (const auto& t : terms) {
    Rational a = t.coefficient;
    out << (a.sign() < 0 ? " - " : " + ");
    out << lp_number(a.abs()) << " " << names[static_cast<size_t>(t.column)];
    if (++count % 8 == 0) out << "\n  ";
  }
}

}  // namespace

bool verify_certificate(const RationalLp& lp, const LpOutcome& outcome, std::string* reason) {
  if (outcome.status != LpStatus::Optimal) return fail(reason, "outcome is not optimal");
  if (static_cast<int>(outcome.duals.size()) != lp.num_constraints()) {
    return fail(reason, "dual vector size mismatch");
  }
  const auto& x = outcome.values;
  if (!primal_feasible(lp, x, reason)) return false;
  Rational dual_objective;
  for (int i = 0; i < lp.num_constraints(); ++i) {
    const auto& row = lp.constraint(i);
    const Rational& yi = outcome.duals[static_cast<size_t>(i)];
    if (row.sense == Sense::LessEqual && yi.sign() > 0) return fail(reason, "dual sign wrong on " + row.name);
    if (row.sense == Sense::GreaterEqual && yi.sign() < 0) return fail(reason, "dual sign wrong on " + row.name);
    if (!yi.is_zero() && lp.row_activity(i, x) != row.rhs) {
      return fail(reason, "complementary slackness fails on " + row.name);
    }
    dual_objective += yi * row.rhs;
  }
  std::vector<Rational> aty = transpose_times(lp, outcome.duals);
  for (int j = 0; j < lp.num_variables(); ++j) {
    const auto& v = lp.variable(j);
    Rational d = lp.objective()[static_cast<size_t>(j)] - aty[static_cast<size_t>(j)];
    const Rational& xj = x[static_cast<size_t>(j)];
    if (d.sign() > 0) {
      if (!v.lower || xj != *v.lower) return fail(reason, "reduced cost sign wrong for " + v.name);
    } else if (d.sign() < 0) {
      if (!v.upper || xj != *v.upper) return fail(reason, "reduced cost sign wrong for " + v.name);
    }
    if (!d.is_zero()) dual_objective += d * xj;
  }
  Rational primal_objective = lp.objective_value(x);
  if (primal_objective != outcome.objective) return fail(reason, "reported objective differs from c x");
  if (primal_objective != dual_objective) return fail(reason, "primal and dual objectives differ");
  return true;
}

bool verify_infeasibility(const RationalLp& lp, const LpOutcome& outcome, std::string* reason) {
  if (outcome.status != LpStatus::Infeasible) return fail(reason, "outcome is not infeasible");
  if (static_cast<int>(outcome.farkas.size()) != lp.num_constraints()) {
    return fail(reason, "certificate size mismatch");
  }
  std::vector<Rational> negated;
  for (const auto& v : outcome.farkas) negated.push_back(-v);
  if (farkas_direction_ok(lp, outcome.farkas) || farkas_direction_ok(lp, negated)) return true;
  return fail(reason, "multipliers do not prove infeasibility");
}

bool verify_unboundedness(const RationalLp& lp, const LpOutcome& outcome, std::string* reason) {
  if (outcome.status != LpStatus::Unbounded) return fail(reason, "outcome is not unbounded");
  if (!primal_feasible(lp, outcome.values, reason)) return false;
  const auto& r = outcome.ray;
  if (static_cast<int>(r.size()) != lp.num_variables()) return fail(reason, "ray size mismatch");
  for (int j = 0; j < lp.num_variables(); ++j) {
    const auto& v = lp.variable(j);
    if (r[static_cast<size_t>(j)].sign() > 0 && v.upper) return fail(reason, "ray leaves upper bound");
    if (r[static_cast<size_t>(j)].sign() < 0 && v.lower) return fail(reason, "ray leaves lower bound");
  }
  for (int i = 0; i < lp.num_constraints(); ++i) {
    const auto& row = lp.constraint(i);
    Rational a = lp.row_activity(i, r);
    if (!row_satisfied(row.sense, a, Rational(0))) return fail(reason, "ray violates " + row.name);
  }
  if (lp.objective_value(r).sign() >= 0) return fail(reason, "ray does not improve the objective");
  return true;
}

void write_lp_format(const RationalLp& lp, std::ostream& out, const std::string& title) {
  std::vector<std::string> names;
  for (const auto& v : lp.variables()) names.push_back(lp_name(v.name));
  if (!title.empty()) out << "\\ " << title << "\n";
  out << "Minimize\n obj:";
  std::vector<Term> obj;
  for (int j = 0; j < lp.num_variables(); ++j) {
    if (!lp.objective()[static_cast<size_t>(j)].is_zero()) obj.push_back({j, lp.objective()[static_cast<size_t>(j)]});
  }
  write_terms(out, obj, names);
  out << "\nSubject To\n";
  for (int i = 0; i < lp.num_constraints(); ++i) {
    const auto& row = lp.constraint(i);
    out << " " << lp_name(row.name) << ":";
    write_terms(out, row.terms, names);
    switch (row.sense) {
      case Sense::LessEqual: out << " <= "; break;
      case Sense::GreaterEqual: out << " >= "; break;
      case Sense::Equal: out << " = "; break;
    }
    out << lp_number(row.rhs) << "\n";
  }
  out << "Bounds\n";
  for (int j = 0; j < lp.num_variables(); ++j) {
    const auto& v = lp.variable(j);
    const std::string& n = names[static_cast<size_t>(j)];
    if (!v.lower && !v.upper) {
      out << " " << n << " free\n";
    } else if (v.lower && v.upper && *v.lower == *v.upper) {
      out << " " << n << " = " << lp_number(*v.lower) << "\n";
    } else {
      out << " " << (v.lower ? lp_number(*v.lower) : std::string("-inf")) << " <= " << n
          << " <= " << (v.upper ? lp_number(*v.upper) : std::string("+inf")) << "\n";
    }
  }
  out << "End\n";
}

}  // namespace steiner_gap
