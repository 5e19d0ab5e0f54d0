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

// Acceptance harness: one PASS/FAIL line per criterion. Exact criteria use
// rational equality; the only numeric tolerances are pinned below.

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdint>
#include <cstring>
#include <functional>
#include <future>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "steiner_gap/constructions.hpp"
#include "steiner_gap/embeddings.hpp"
#include "steiner_gap/formulations.hpp"
#include "steiner_gap/graph_algorithms.hpp"
#include "steiner_gap/instances.hpp"
#include "steiner_gap/lp.hpp"
#include "steiner_gap/oracles.hpp"
#include "steiner_gap/setcover.hpp"
#include "steiner_gap/simplex_geometry.hpp"
#include "steiner_gap/solutions.hpp"
#include "support/random_instances.hpp"

namespace {

using namespace steiner_gap;
using Clock = std::chrono::steady_clock;

// Pinned tolerances and budgets.
constexpr double kFloatFeasibilityTolerance = 1e-6;
constexpr double kTableFloatTolerance = 0.00002;
constexpr double kExactTableBudgetSecsPerD = 60.0;
constexpr double kEquivalenceBudgetSecs = 300.0;
constexpr double kConstructionBudgetSecs = 120.0;
constexpr double kCountingBudgetSecs = 30.0;

const std::array<const char*, 4> kMainTable = {"1.00000", "1.06666", "1.09459", "1.12116"};
constexpr double kMainTableD4 = 1.12116;
const std::array<const char*, 2> kLevelTwoTable = {"1.06666", "1.09090"};  // d = 2, 3

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

class Criterion {
 public:
  Criterion(int id, std::string title) : id_(id), title_(std::move(title)), start_(Clock::now()) {}

  // Records a failure when `ok` is false. Returns `ok`.
  bool check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) failures_.push_back(what);
    return ok;
  }
  void note(const std::string& text) { notes_.push_back(text); }
  double elapsed() const { return seconds_since(start_); }
  bool passed() const { return failures_.empty() && checks_ > 0; }

  void report(std::ostream& out) const {
    out << (passed() ? "PASS" : "FAIL") << " criterion " << id_ << ": " << title_ << " (" << checks_
        << " checks, " << std::fixed;
    out.precision(1);
    out << elapsed() << " s)";
    out.unsetf(std::ios::floatfield);
    out << "\n";
    for (const auto& n : notes_) out << "    " << n << "\n";
    const size_t shown = std::min<size_t>(failures_.size(), 10);
    for (size_t i = 0; i < shown; ++i) out << "    failed: " << failures_[i] << "\n";
    if (failures_.size() > shown) out << "    ... " << failures_.size() - shown << " more failures\n";
    if (checks_ == 0) out << "    failed: no checks ran\n";
  }

 private:
  int id_;
  std::string title_;
  Clock::time_point start_;
  int checks_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

// Shared invariants gathered while the other criteria run, reported as
// part of the property criterion.
struct PropertyLog {
  int chain_checks = 0;
  int certificate_checks = 0;
  std::vector<std::string> failures;

  void fail(const std::string& what) { failures.push_back(what); }
};

PropertyLog g_properties;

struct ExactSolve {
  bool optimal = false;
  Rational objective;
  FormulationSolution solution;
  std::string reason;
};

// Exact solve whose optimum is accepted only with a verified duality
// certificate and a verified primal solution.
ExactSolve solve_verified(const SteinerInstance& inst, const FormulationKind& kind, CompiledLp compiled) {
  ExactSolve out;
  LpOutcome outcome = solve_exact(compiled.lp);
  if (outcome.status != LpStatus::Optimal) {
    out.reason = inst.name + " " + to_string(kind) + " status " + to_string(outcome.status);
    return out;
  }
  std::string why;
  ++g_properties.certificate_checks;
  if (!verify_certificate(compiled.lp, outcome, &why)) {
    out.reason = inst.name + " " + to_string(kind) + " certificate: " + why;
    g_properties.fail(out.reason);
    return out;
  }
  out.solution = unpack(compiled, outcome.values);
  if (compiled.valid_groups.empty() && !verify(inst, kind, out.solution, &why)) {
    out.reason = inst.name + " " + to_string(kind) + " solution: " + why;
    g_properties.fail(out.reason);
    return out;
  }
  out.optimal = true;
  out.objective = outcome.objective;
  return out;
}

ExactSolve solve_verified(const SteinerInstance& inst, const FormulationKind& kind) {
  return solve_verified(inst, kind, compile(inst, kind));
}

// opt(BCR) <= opt(BCR-plus) <= opt(STP).
void check_chain(const std::string& name, const Rational& base, const Rational& plus,
                 const std::optional<Rational>& tree) {
  ++g_properties.chain_checks;
  if (!(base <= plus)) g_properties.fail(name + ": opt(BCR) " + base.to_string() + " > opt(BCR+) " + plus.to_string());
  if (tree && !(plus <= *tree)) {
    g_properties.fail(name + ": opt(BCR+) " + plus.to_string() + " > opt(STP) " + tree->to_string());
  }
}

std::optional<Rational> tree_optimum(const SteinerInstance& inst) {
  try {
    return exact_steiner_tree(inst).optimum;
  } catch (const SizeLimitExceeded&) {
    return std::nullopt;
  }
}

// ------------------------------------------------------------------ 1

void criterion_table(Criterion& c, bool exact_d4) {
  for (int d = 1; d <= 3; ++d) {
    auto start = Clock::now();
    SteinerInstance inst = gen_simplex_instance(d, d);
    ExactSolve base = solve_verified(inst, {BaseFormulation::MCFR, false, -1});
    ExactSolve plus = solve_verified(inst, {BaseFormulation::MCFR, true, -1});
    double secs = seconds_since(start);
    if (!c.check(base.optimal && plus.optimal, "d=" + std::to_string(d) + ": " + base.reason + plus.reason)) continue;
    Rational gap = plus.objective / base.objective;
    std::string shown = gap.to_decimal(5, true);
    c.check(shown == kMainTable[static_cast<size_t>(d - 1)],
            "d=" + std::to_string(d) + ": " + shown + " vs " + kMainTable[static_cast<size_t>(d - 1)]);
    c.check(secs <= kExactTableBudgetSecsPerD, "d=" + std::to_string(d) + " took " + std::to_string(secs) + " s");
    c.note("d=" + std::to_string(d) + " exact " + plus.objective.to_string() + " / " + base.objective.to_string() +
           " = " + gap.to_string() + " -> " + shown);
    check_chain(inst.name, base.objective, plus.objective, tree_optimum(inst));
  }

  SteinerInstance si4 = gen_simplex_instance(4, 4);
  auto float_solve = [&si4](bool plus) {
    CompiledLp compiled = compile(si4, FormulationKind{BaseFormulation::MCFR, plus, -1});
    return solve_float(compiled.lp, kFloatFeasibilityTolerance);
  };
  auto base_future = std::async(std::launch::async, float_solve, false);
  auto plus_future = std::async(std::launch::async, float_solve, true);
  FloatOutcome base = base_future.get();
  FloatOutcome plus = plus_future.get();
  bool ok = c.check(base.status == LpStatus::Optimal && plus.status == LpStatus::Optimal, "d=4 float solve not optimal");
  if (ok) {
    c.check(base.max_violation <= kFloatFeasibilityTolerance && plus.max_violation <= kFloatFeasibilityTolerance,
            "d=4 float primal violation above tolerance");
    double gap = plus.objective / base.objective;
    c.check(std::abs(gap - kMainTableD4) <= kTableFloatTolerance,
            "d=4 float gap " + std::to_string(gap) + " vs " + kMainTable[3]);
    std::ostringstream line;
    line.precision(10);
    line << "d=4 float " << plus.objective << " / " << base.objective << " = " << gap << " (published "
         << kMainTable[3] << ", tolerance " << kTableFloatTolerance << ")";
    c.note(line.str());
  }
  if (exact_d4) {
    ExactSolve eb = solve_verified(si4, {BaseFormulation::MCFR, false, -1});
    ExactSolve ep = solve_verified(si4, {BaseFormulation::MCFR, true, -1});
    if (c.check(eb.optimal && ep.optimal, "d=4 exact: " + eb.reason + ep.reason)) {
      Rational gap = ep.objective / eb.objective;
      c.check(gap.to_decimal(5, true) == kMainTable[3], "d=4 exact " + gap.to_string());
      c.note("d=4 exact " + ep.objective.to_string() + " / " + eb.objective.to_string() + " = " + gap.to_string());
    }
  } else {
    c.note("d=4 exact skipped (optional; pass --exact-d4)");
  }
}

// ------------------------------------------------------------------ 2

void criterion_level_two(Criterion& c) {
  for (int d = 2; d <= 3; ++d) {
    SteinerInstance inst = gen_level_restricted(d, d, 2);
    ExactSolve base = solve_verified(inst, {BaseFormulation::MCFR, false, -1});
    ExactSolve plus = solve_verified(inst, {BaseFormulation::MCFR, true, -1});
    if (!c.check(base.optimal && plus.optimal, inst.name + ": " + base.reason + plus.reason)) continue;
    Rational gap = plus.objective / base.objective;
    std::string shown = gap.to_decimal(5, true);
    c.check(shown == kLevelTwoTable[static_cast<size_t>(d - 2)],
            "d=" + std::to_string(d) + ": " + shown + " vs " + kLevelTwoTable[static_cast<size_t>(d - 2)]);
    if (d == 3) {
      c.check(gap == gap_lower_bound(3, 4), "d=3 gap " + gap.to_string() + " != gap_lower_bound(3,4)");
      c.check(gap == Rational(12, 11), "d=3 gap " + gap.to_string() + " != 12/11");
    }
    c.note("d=" + std::to_string(d) + " " + plus.objective.to_string() + " / " + base.objective.to_string() + " = " +
           gap.to_string() + " -> " + shown);
    check_chain(inst.name, base.objective, plus.objective, std::nullopt);
  }
}

// ------------------------------------------------------------------ 3

void criterion_plus_optimum(Criterion& c) {
  for (auto [d, s] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}}) {
    SteinerInstance inst = gen_simplex_instance(d, s);
    const Rational expected(2 * s * d);
    ExactSolve plus = solve_verified(inst, {BaseFormulation::MCFR, true, -1});
    if (!c.check(plus.optimal, plus.reason)) continue;
    c.check(plus.objective == expected, inst.name + ": opt " + plus.objective.to_string());
    SimplexEmbedding emb = canonical_embedding(inst);
    std::string why;
    c.check(verify_se(inst, emb, true, &why), inst.name + ": canonical SE+ rejected: " + why);
    c.check(se_objective(inst, emb) == plus.objective,
            inst.name + ": SE+ objective " + se_objective(inst, emb).to_string());
  }
}

// ------------------------------------------------------------------ 4

testing::RandomInstanceShape equivalence_shape() {
  testing::RandomInstanceShape shape;
  shape.min_vertices = 3;
  shape.max_vertices = 8;
  shape.min_required = 2;
  shape.max_required = 4;
  shape.min_cost = 0;
  shape.max_cost = 10;
  return shape;
}

constexpr std::array<BaseFormulation, 5> kBases = {BaseFormulation::MCFR, BaseFormulation::MBFR,
                                                   BaseFormulation::BCR, BaseFormulation::MBCR,
                                                   BaseFormulation::STER};

void criterion_equivalence(Criterion& c) {
  for (uint32_t seed = 1; seed <= 20; ++seed) {
    SteinerInstance inst = testing::random_instance(1000 + seed, equivalence_shape());
    std::array<Rational, 2> reference;
    for (int plus = 0; plus < 2; ++plus) {
      std::optional<Rational> first;
      for (BaseFormulation base : kBases) {
        FormulationKind kind{base, plus == 1, -1};
        ExactSolve sol = solve_verified(inst, kind);
        if (!c.check(sol.optimal, sol.reason)) continue;
        if (!first) first = sol.objective;
        c.check(sol.objective == *first, inst.name + " " + to_string(kind) + " " + sol.objective.to_string() +
                                             " vs " + first->to_string());
        CompiledLp grouped = add_valid_constraints(compile(inst, kind), 1);
        ExactSolve with_group = solve_verified(inst, kind, std::move(grouped));
        if (c.check(with_group.optimal, with_group.reason)) {
          c.check(with_group.objective == sol.objective, inst.name + " " + to_string(kind) + " with group 1 " +
                                                             with_group.objective.to_string());
        }
      }
      for (VertexId r : inst.required) {
        FormulationKind kind{BaseFormulation::MCFR, plus == 1, r};
        ExactSolve sol = solve_verified(inst, kind);
        if (c.check(sol.optimal, sol.reason) && first) {
          c.check(sol.objective == *first, inst.name + " " + to_string(kind) + " root " + std::to_string(r));
        }
      }
      if (first) reference[static_cast<size_t>(plus)] = *first;
    }
    check_chain(inst.name, reference[0], reference[1], tree_optimum(inst));
  }
  c.check(c.elapsed() <= kEquivalenceBudgetSecs, "took " + std::to_string(c.elapsed()) + " s");
}

// ------------------------------------------------------------------ 5

void criterion_three_terminals(Criterion& c) {
  testing::RandomInstanceShape shape;
  shape.min_vertices = 4;
  shape.max_vertices = 10;
  shape.min_required = 3;
  shape.max_required = 3;
  shape.min_cost = 0;
  shape.max_cost = 10;
  int normalized_differs = 0;
  for (uint32_t seed = 1; seed <= 20; ++seed) {
    SteinerInstance inst = testing::random_instance(2000 + seed, shape);
    FormulationKind kind{BaseFormulation::MCFR, true, -1};
    ExactSolve sol = solve_verified(inst, kind);
    if (!c.check(sol.optimal, sol.reason)) continue;
    Rational tree = exact_steiner_tree(inst).optimum;
    c.check(sol.objective == tree, inst.name + ": opt(MCFR+) " + sol.objective.to_string() + " vs tree " +
                                       tree.to_string());
    const auto& raw = std::get<McfrSolution>(sol.solution);
    // Zero-cost edges leave u undetermined among optima. The decomposition
    // works on the normalized optimum, which must stay optimal and agree
    // with the solver's u wherever an edge has positive cost.
    McfrSolution mcfr = normalize_mcfr(inst, raw);
    if (mcfr.u != raw.u) ++normalized_differs;
    std::string why;
    c.check(verify(inst, kind, mcfr, &why), inst.name + ": normalized optimum infeasible: " + why);
    c.check(solution_objective(inst, mcfr) == sol.objective, inst.name + ": normalization changed the objective");
    for (EdgeId e = 0; e < inst.num_edges(); ++e) {
      if (inst.graph.cost(e) > Rational(0)) {
        c.check(mcfr.u[static_cast<size_t>(e)] == raw.u[static_cast<size_t>(e)],
                inst.name + ": normalization changed u on a positive-cost edge");
      }
    }
    try {
      ConvexDecomposition dec = decompose_three_terminal(inst, mcfr);
      c.check(dec.exact, inst.name + ": decomposition not exact: " + dec.flag);
      Rational total;
      EdgeValues usage(static_cast<size_t>(inst.num_edges()));
      for (const WeightedTree& wt : dec.trees) {
        c.check(wt.lambda > Rational(0), inst.name + ": non-positive weight");
        c.check(check_steiner_tree(inst, wt.tree).empty(), inst.name + ": component is not a Steiner tree");
        total += wt.lambda;
        for (EdgeId e : wt.tree.edges) usage[static_cast<size_t>(e)] += wt.lambda;
      }
      c.check(total == Rational(1), inst.name + ": weights sum to " + total.to_string());
      c.check(usage == mcfr.u, inst.name + ": weighted tree indicators differ from u");
    } catch (const DecompositionError& e) {
      c.check(false, inst.name + ": " + e.what());
    }
    check_chain(inst.name, solve_verified(inst, {BaseFormulation::MCFR, false, -1}).objective, sol.objective, tree);
  }
  c.note("instances whose solver u differs from the normalized u on zero-cost edges: " +
         std::to_string(normalized_differs));
}

// ------------------------------------------------------------------ 6

// 6d / (5d + 1 + (d - 1)/s), written out independently of the library.
Rational limit_formula(int d, int s) {
  return Rational(6 * d) / (Rational(5 * d + 1) + Rational(d - 1, s));
}

void criterion_constructions(Criterion& c) {
  const std::vector<std::array<int, 3>> cases = {{2, 4, 2},  {2, 7, 3}, {2, 9, 3}, {2, 11, 4},
                                                 {2, 13, 5}, {3, 4, 2}, {4, 4, 2}, {5, 4, 2}};
  for (auto [d, s, delta] : cases) {
    const std::string name = "(" + std::to_string(d) + "," + std::to_string(s) + "," + std::to_string(delta) + ")";
    SteinerInstance inst = gen_simplified_simplex_instance(d, s, delta);
    MbfrSolution sol = simplified_simplex_solution(inst, d, s, delta);
    std::string why;
    c.check(verify(inst, FormulationKind{BaseFormulation::MBFR, false, -1}, sol, &why), name + ": " + why);
    Rational cost = closed_form_cost(d, s, delta);
    c.check(solution_objective(inst, sol) == cost, name + ": objective " + solution_objective(inst, sol).to_string() +
                                                      " vs closed form " + cost.to_string());
    // Weak duality: the canonical SE+ embedding bounds opt(BCR+) from
    // below and the constructed solution bounds opt(BCR) from above.
    SimplexEmbedding emb = canonical_embedding(inst);
    c.check(verify_se(inst, emb, true, &why), name + ": canonical SE+ rejected: " + why);
    Rational tree(2 * s * d);
    c.check(se_objective(inst, emb) == tree, name + ": SE+ objective " + se_objective(inst, emb).to_string());
    Rational bound = tree / cost;
    if (s == 3 * delta - 2) {
      c.check(bound == limit_formula(d, s), name + ": bound " + bound.to_string() + " vs formula");
      c.check(bound == gap_lower_bound(d, s), name + ": bound vs gap_lower_bound");
    }
    if (d == 2) {
      ExactSolve base = solve_verified(inst, {BaseFormulation::MCFR, false, -1});
      ExactSolve plus = solve_verified(inst, {BaseFormulation::MCFR, true, -1});
      if (c.check(base.optimal && plus.optimal, name + ": " + base.reason + plus.reason)) {
        c.check(plus.objective / base.objective >= bound, name + ": solved gap below bound");
        c.check(plus.objective == tree, name + ": opt(BCR+) " + plus.objective.to_string());
        check_chain(inst.name, base.objective, plus.objective, tree_optimum(inst));
      }
    }
    c.note(name + " cost " + cost.to_string() + ", gap >= " + bound.to_string() + " = " + bound.to_decimal(5));
  }
  c.check(c.elapsed() <= kConstructionBudgetSecs, "took " + std::to_string(c.elapsed()) + " s");
}

// ------------------------------------------------------------------ 7

void criterion_goemans(Criterion& c) {
  for (int d = 1; d <= 5; ++d) {
    SteinerInstance inst = gen_goemans_instance(d);
    McfrSolution sol = goemans_fractional(inst);
    std::string why;
    FormulationKind kind{BaseFormulation::MCFR, false, sol.root};
    c.check(verify(inst, kind, sol, &why), inst.name + ": " + why);
    c.check(solution_objective(inst, sol) == Rational(7 * d + 1, 2),
            inst.name + ": cost " + solution_objective(inst, sol).to_string());
    if (d <= 3) {
      Rational tree = exact_steiner_tree(inst).optimum;
      c.check(tree == Rational(4 * d), inst.name + ": tree " + tree.to_string());
      Rational gap = tree / solution_objective(inst, sol);
      c.check(gap == Rational(8 * d, 7 * d + 1), inst.name + ": gap bound " + gap.to_string());
    }
  }
}

// ------------------------------------------------------------------ 8

void criterion_counting(Criterion& c) {
  for (int d = 0; d <= 4; ++d) {
    for (int s = 0; s <= 6; ++s) {
      std::vector<SimplexPoint> pts = enumerate_simplex(d, s);
      // Independent enumeration: every vector in [0, s]^(d+1) with sum s.
      int64_t brute_total = 0;
      std::vector<int> x(static_cast<size_t>(d + 1), 0);
      std::function<void(int, int)> walk = [&](int i, int left) {
        if (i == d) {
          ++brute_total;
          return;
        }
        for (int v = 0; v <= left; ++v) walk(i + 1, left - v);
      };
      walk(0, s);
      c.check(count_simplex(d, s) == brute_total, "count_simplex(" + std::to_string(d) + "," + std::to_string(s) + ")");
      c.check(static_cast<int64_t>(pts.size()) == brute_total, "enumerate_simplex size");
      for (int k = 0; k <= s; ++k) {
        if (2 * k + 1 < s) continue;
        int64_t within = 0;
        for (const auto& p : pts) within += p.max_coord() <= k ? 1 : 0;
        c.check(count_radius(d, s, k) == within, "count_radius(" + std::to_string(d) + "," + std::to_string(s) +
                                                     "," + std::to_string(k) + ")");
        for (int l = 0; l <= d; ++l) {
          int64_t brute = 0;
          for (const auto& p : pts) {
            int positive = 0;
            for (int v : p.coords) positive += v > 0 ? 1 : 0;
            if (p.max_coord() <= k && positive == l + 1) ++brute;
          }
          c.check(count_radius_level(d, s, k, l) == brute,
                  "count_radius_level(" + std::to_string(d) + "," + std::to_string(s) + "," + std::to_string(k) +
                      "," + std::to_string(l) + ")");
        }
      }
    }
  }
  for (int d = 0; d <= 3; ++d) {
    for (int s = 0; s <= 5; ++s) {
      std::set<std::vector<int>> images;
      for (const auto& p : enumerate_simplex(d, s)) {
        std::vector<int> subset = point_subset_bijection(p);
        c.check(subset_to_point(subset, d, s) == p, "bijection round trip at " + p.to_string());
        c.check(static_cast<int>(subset.size()) == d, "subset size at " + p.to_string());
        c.check(std::is_sorted(subset.begin(), subset.end()) &&
                    std::adjacent_find(subset.begin(), subset.end()) == subset.end(),
                "subset not strictly increasing at " + p.to_string());
        images.insert(subset);
      }
      c.check(static_cast<int64_t>(images.size()) == binomial(s + d, d), "bijection not injective");
    }
  }
  c.check(c.elapsed() <= kCountingBudgetSecs, "took " + std::to_string(c.elapsed()) + " s");
}

// ------------------------------------------------------------------ 9

void criterion_multiway(Criterion& c) {
  for (auto [s, delta] : std::vector<std::pair<int, int>>{{4, 2}, {7, 3}, {9, 3}}) {
    SteinerInstance inst = gen_multiway_dual(s, delta);
    SimplexEmbedding x = ckr_canonical_for_dual(inst, s, delta);
    Rational value = ckr_objective(inst, x);
    Rational cost = closed_form_cost(2, s, delta);
    c.check(value == cost, inst.name + ": CKR " + value.to_string() + " vs " + cost.to_string());
    const int q = 2 * s - 3 * delta + 1;
    c.check(Rational(4 * s) / value == ckr_gap_formula(q),
            inst.name + ": 4s / CKR = " + (Rational(4 * s) / value).to_string());
    if (s == 4) {
      Rational cut = exact_multiway_cut(inst).optimum;
      c.check(cut == Rational(16), inst.name + ": multiway cut " + cut.to_string());
      c.check(value <= cut, inst.name + ": relaxation above integral cut");
    }
  }
}

// ------------------------------------------------------------------ 10

void criterion_setcover(Criterion& c) {
  SetCoverInstance triangle(SetFamily{{1, 2}, {1, 3}, {2, 3}});
  SetCoverInstance s3 = gen_skutella_family(3);
  struct Case {
    std::string name;
    SetCoverInstance family;
    int p;
  };
  for (const Case& k : std::vector<Case>{{"triangle", triangle, 1}, {"triangle", triangle, 2}, {"S3", s3, 1}}) {
    const std::string name = k.name + " p=" + std::to_string(k.p);
    SteinerInstance inst = gen_sci(k.family, k.p);
    const int cover = exact_set_cover(k.family.sets()).size;
    Rational tree = exact_steiner_tree(inst).optimum;
    c.check(tree == sci_opt_formula(k.family, k.p, cover),
            name + ": tree " + tree.to_string() + " vs formula " + sci_opt_formula(k.family, k.p, cover).to_string());
    McfrSolution sol = sci_fractional_solution(k.family, k.p);
    std::string why;
    c.check(verify(inst, FormulationKind{BaseFormulation::MCFR, true, sol.root}, sol, &why), name + ": " + why);
    c.check(solution_objective(inst, sol) == sci_fractional_objective(k.family, k.p),
            name + ": objective " + solution_objective(inst, sol).to_string());
  }
  c.check(sci_gap_bound(s3, 1) == Rational(8, 7), "sci_gap_bound(S3, 1) = " + sci_gap_bound(s3, 1).to_string());
  c.check(sci_gap_limit(s3) == Rational(36, 31), "sci_gap_limit(S3) = " + sci_gap_limit(s3).to_string());
}

// ------------------------------------------------------------------ 11

Rational cut_usage(const Graph& g, const EdgeValues& u, uint32_t mask) {
  Rational total;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    if (((mask >> ed.u) & 1U) != ((mask >> ed.v) & 1U)) total += u[static_cast<size_t>(e)];
  }
  return total;
}

void criterion_properties(Criterion& c) {
  // Gale condition: a bidirected balance flow exists iff every vertex set
  // X has u(delta(X)) >= b(X).
  std::mt19937 rng(7);
  int feasible = 0;
  int infeasible = 0;
  for (uint32_t seed = 1; seed <= 40; ++seed) {
    SteinerInstance inst = testing::random_instance(3000 + seed, {3, 10, 2, 3, 0, 10, 0.3});
    const Graph& g = inst.graph;
    const int n = g.num_vertices();
    EdgeValues u;
    for (EdgeId e = 0; e < g.num_edges(); ++e) u.push_back(Rational(std::uniform_int_distribution<int>(0, 4)(rng), 2));
    VertexValues b(static_cast<size_t>(n));
    Rational sum;
    for (int v = 0; v + 1 < n; ++v) {
      b[static_cast<size_t>(v)] = Rational(std::uniform_int_distribution<int>(-3, 3)(rng), 3);
      sum += b[static_cast<size_t>(v)];
    }
    b[static_cast<size_t>(n - 1)] = -sum;
    bool condition = true;
    for (uint32_t mask = 0; mask < (1U << n) && condition; ++mask) {
      Rational bx;
      for (int v = 0; v < n; ++v) {
        if ((mask >> v) & 1U) bx += b[static_cast<size_t>(v)];
      }
      if (cut_usage(g, u, mask) < bx) condition = false;
    }
    BalanceFlowResult r = construct_bidirected_balance_flow(g, u, b);
    c.check(r.feasible == condition, inst.name + ": Gale condition disagrees with construction");
    if (r.feasible) {
      ++feasible;
      c.check(check_balance_flow(g, u, b, r.flow).empty(), inst.name + ": constructed flow invalid");
    } else {
      ++infeasible;
    }
  }
  c.check(feasible > 0 && infeasible > 0, "Gale sample lacks both outcomes");
  c.note("Gale condition: " + std::to_string(feasible) + " feasible, " + std::to_string(infeasible) +
         " infeasible, all matched by exhaustive enumeration");

  // Translation round trips on the equivalence instances.
  int round_trips = 0;
  for (uint32_t seed = 1; seed <= 20; ++seed) {
    SteinerInstance inst = testing::random_instance(1000 + seed, equivalence_shape());
    for (int plus = 0; plus < 2; ++plus) {
      ExactSolve m = solve_verified(inst, {BaseFormulation::MCFR, plus == 1, -1});
      if (!c.check(m.optimal, m.reason)) continue;
      const auto& mcfr = std::get<McfrSolution>(m.solution);
      const bool p = plus == 1;
      std::string why;
      MbfrSolution mbfr = translate_mcfr_to_mbfr(inst, mcfr, p);
      c.check(verify(inst, {BaseFormulation::MBFR, p, -1}, mbfr, &why), inst.name + " MCFR->MBFR: " + why);
      MbcrSolution mbcr = translate_mbfr_to_mbcr(inst, mbfr, p);
      c.check(verify(inst, {BaseFormulation::MBCR, p, -1}, mbcr, &why), inst.name + " MBFR->MBCR: " + why);
      SterSolution ster = translate_mbcr_to_ster(inst, mbcr, p);
      c.check(verify(inst, {BaseFormulation::STER, p, -1}, ster, &why), inst.name + " MBCR->STER: " + why);
      MbcrSolution mbcr2 = translate_ster_to_mbcr(inst, ster, p);
      c.check(verify(inst, {BaseFormulation::MBCR, p, -1}, mbcr2, &why), inst.name + " STER->MBCR: " + why);
      MbfrSolution mbfr2 = translate_mbcr_to_mbfr(inst, mbcr2, p);
      c.check(verify(inst, {BaseFormulation::MBFR, p, -1}, mbfr2, &why), inst.name + " MBCR->MBFR: " + why);
      McfrSolution back = translate_mbfr_to_mcfr(inst, mbfr2, p, mcfr.root);
      c.check(verify(inst, {BaseFormulation::MCFR, p, mcfr.root}, back, &why), inst.name + " MBFR->MCFR: " + why);
      for (const EdgeValues* u : {&mbfr.u, &mbcr.u, &ster.u, &mbcr2.u, &mbfr2.u, &back.u}) {
        c.check(*u == mcfr.u, inst.name + ": translation changed u");
      }
      ++round_trips;
    }
  }
  c.note("translation round trips: " + std::to_string(round_trips));

  c.check(g_properties.chain_checks > 0, "no chain inequality was checked");
  c.check(g_properties.certificate_checks > 0, "no duality certificate was checked");
  for (const auto& f : g_properties.failures) c.check(false, f);
  c.check(true, "chain and certificate log");
  c.note("chain opt(BCR) <= opt(BCR+) <= opt(STP): " + std::to_string(g_properties.chain_checks) +
         " instances; duality certificates: " + std::to_string(g_properties.certificate_checks));
  c.note("published d=5..9 table entries are outside desk-scale exact reproduction");
}

}  // namespace

int main(int argc, char** argv) {
  bool exact_d4 = false;
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--exact-d4") == 0) {
      exact_d4 = true;
    } else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) {
      std::stringstream list(argv[++i]);
      for (std::string item; std::getline(list, item, ',');) only.insert(std::stoi(item));
    } else {
      std::cerr << "usage: acceptance [--exact-d4] [--only 1,2,...]\n";
      return 2;
    }
  }

  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"exact table reproduction", [&](Criterion& c) { criterion_table(c, exact_d4); }},
      {"level-restricted table", criterion_level_two},
      {"opt(MCFR+) = 2sd with SE+ certificate", criterion_plus_optimum},
      {"formulation equivalence on random instances", criterion_equivalence},
      {"three-terminal exactness and decomposition", criterion_three_terminals},
      {"constructed simplified-simplex solutions", criterion_constructions},
      {"Goemans instances", criterion_goemans},
      {"counting formulas and bijection", criterion_counting},
      {"multiway-cut duality", criterion_multiway},
      {"set-cover instances", criterion_setcover},
      {"property suites", criterion_properties},
  };
  int failed = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    const int id = static_cast<int>(i) + 1;
    if (!only.empty() && only.count(id) == 0) continue;
    Criterion c(id, criteria[i].first);
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.check(false, std::string("exception: ") + e.what());
    }
    c.report(std::cout);
    std::cout.flush();
    if (!c.passed()) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
