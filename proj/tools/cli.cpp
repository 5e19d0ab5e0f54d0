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

#include "cli.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>
#include <utility>

#include "steiner_gap/constructions.hpp"
#include "steiner_gap/instances.hpp"
#include "steiner_gap/lp.hpp"
#include "steiner_gap/oracles.hpp"
#include "steiner_gap/serialization.hpp"

namespace steiner_gap::cli {

using nlohmann::ordered_json;

namespace {

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Runs every task on up to `jobs` threads. Tasks must not throw.
void run_parallel(std::vector<std::function<void()>>& tasks, int jobs) {
  const int workers = std::max(1, std::min(jobs, static_cast<int>(tasks.size())));
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i = next++; i < tasks.size(); i = next++) tasks[i]();
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

auto sort_key(const FamilyParams& p) {
  return std::make_tuple(p.family, p.d, p.s, p.delta, p.lmax, p.n, p.p, p.set_family, p.sets_file, p.extended);
}

}  // namespace

const std::vector<std::string>& known_families() {
  static const std::vector<std::string> families = {"simplex", "simplified", "split",   "goemans",
                                                    "level2",  "dual",       "setcover", "skutella"};
  return families;
}

SetCoverInstance load_set_family(const FamilyParams& params) {
  if (!params.sets_file.empty()) return SetCoverInstance(set_family_from_json(read_text(params.sets_file)));
  if (params.family == "skutella" || params.set_family == "skutella") return gen_skutella_family(params.n);
  if (params.set_family == "triangle") return SetCoverInstance(SetFamily{{1, 2}, {1, 3}, {2, 3}});
  throw UsageError("unknown set family '" + params.set_family + "' (expected triangle or skutella)");
}

SteinerInstance generate(const FamilyParams& params) {
  const std::string& f = params.family;
  if (f == "simplex") return gen_simplex_instance(params.d, params.s);
  if (f == "simplified") return gen_simplified_simplex_instance(params.d, params.s, params.delta);
  if (f == "split") {
    // The split graph has no terminals of its own. Its auxiliary vertices
    // stand in for the corners, so they are written as terminals.
    SplitGraph split = gen_split_simplified_graph(params.d, params.s, params.delta);
    std::vector<VertexId> required;
    for (VertexId v = 0; v < split.graph.num_vertices(); ++v) {
      if (split.aux_owner[static_cast<size_t>(v)] >= 0) required.push_back(v);
    }
    return make_instance(split.graph, required,
                         "split_d" + std::to_string(params.d) + "_s" + std::to_string(params.s) + "_delta" +
                             std::to_string(params.delta));
  }
  if (f == "goemans") return gen_goemans_instance(params.d);
  if (f == "level2") return gen_level_restricted(params.d, params.s, params.lmax);
  if (f == "dual") return gen_multiway_dual(params.s, params.delta);
  if (f == "setcover" || f == "skutella") return gen_sci(load_set_family(params), params.p, params.extended);
  throw UsageError("unknown family '" + f + "'");
}

ordered_json params_json(const FamilyParams& params) {
  ordered_json j = ordered_json::object();
  j["family"] = params.family;
  const std::string& f = params.family;
  if (f == "simplex") {
    j["d"] = params.d;
    j["s"] = params.s;
  } else if (f == "simplified" || f == "split") {
    j["d"] = params.d;
    j["s"] = params.s;
    j["delta"] = params.delta;
  } else if (f == "goemans") {
    j["d"] = params.d;
  } else if (f == "level2") {
    j["d"] = params.d;
    j["s"] = params.s;
    j["lmax"] = params.lmax;
  } else if (f == "dual") {
    j["s"] = params.s;
    j["delta"] = params.delta;
  } else if (f == "setcover" || f == "skutella") {
    if (!params.sets_file.empty()) {
      j["sets"] = params.sets_file;
    } else if (f == "skutella" || params.set_family == "skutella") {
      j["set_family"] = "skutella";
      j["n"] = params.n;
    } else {
      j["set_family"] = params.set_family;
    }
    j["p"] = params.p;
    j["extended"] = params.extended;
  }
  return j;
}

std::optional<double> time_limit_from_env() {
  const char* raw = std::getenv("STEINER_GAP_TIME_LIMIT_SECS");
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  double secs = std::strtod(raw, &end);
  if (end == raw || *end != '\0' || !(secs > 0)) {
    throw UsageError(std::string("STEINER_GAP_TIME_LIMIT_SECS must be a positive number, got '") + raw + "'");
  }
  return secs;
}

SolveRecord solve_one(const SteinerInstance& inst, const FormulationKind& kind, const SolveConfig& config) {
  SolveRecord rec;
  rec.kind = kind;
  const auto start = std::chrono::steady_clock::now();
  SolveOptions options;
  if (config.time_limit_secs) {
    options.deadline = start + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                   std::chrono::duration<double>(*config.time_limit_secs));
  }
  auto elapsed = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(); };
  try {
    CompiledLp compiled = compile(inst, kind);
    if (config.exact) {
      LpOutcome out = solve_exact(compiled.lp, options);
      rec.status = to_string(out.status);
      if (out.status == LpStatus::Optimal) {
        std::string why;
        if (!verify_certificate(compiled.lp, out, &why)) {
          rec.status = "CertificateRejected";
          rec.detail = why;
        } else {
          FormulationSolution sol = unpack(compiled, out.values);
          if (!verify(inst, kind, sol, &why)) {
            rec.status = "CertificateRejected";
            rec.detail = why;
          } else {
            rec.objective = out.objective;
            rec.solution = std::move(sol);
          }
        }
      }
    } else {
      FloatOutcome out = solve_float(compiled.lp, config.tolerance, options);
      rec.status = to_string(out.status);
      if (out.status == LpStatus::Optimal) {
        if (out.max_violation > config.tolerance) {
          rec.status = "CertificateRejected";
          rec.detail = "primal violation " + std::to_string(out.max_violation) + " exceeds tolerance";
        } else {
          rec.objective_float = out.objective;
        }
      }
    }
  } catch (const SolveTimeout&) {
    rec.status = "TimedOut";
    rec.objective.reset();
    rec.objective_float.reset();
  } catch (const NumericalFailure& e) {
    rec.status = "Failed";
    rec.detail = e.what();
  }
  rec.seconds = elapsed();
  return rec;
}

std::string decimal5(const Rational& value) { return value.to_decimal(5, true); }

std::string decimal5(double value) {
  const double rounded = std::round(value * 1e9) / 1e9;
  const double truncated = std::trunc(rounded * 1e5) / 1e5;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.5f", truncated);
  return buf;
}

std::optional<GapEntry> make_gap(const std::string& num_label, const SolveRecord& num,
                                 const std::string& den_label, const SolveRecord& den) {
  GapEntry g{num_label, den_label, std::nullopt, std::nullopt};
  if (num.objective && den.objective) {
    if (den.objective->is_zero()) return std::nullopt;
    g.ratio = *num.objective / *den.objective;
    return g;
  }
  auto as_double = [](const SolveRecord& r) -> std::optional<double> {
    if (r.objective) return r.objective->to_double();
    return r.objective_float;
  };
  auto n = as_double(num);
  auto d = as_double(den);
  if (!n || !d || *d == 0.0) return std::nullopt;
  g.ratio_float = *n / *d;
  return g;
}

ordered_json to_json(const SolveRecord& record) {
  ordered_json j;
  j["formulation"] = to_string(record.kind.base);
  j["plus"] = record.kind.plus;
  if (uses_root(record.kind.base) && record.kind.root >= 0) j["root"] = record.kind.root;
  j["status"] = record.status;
  if (record.objective) {
    j["objective"] = record.objective->to_string();
    j["decimal5"] = decimal5(*record.objective);
    j["exact"] = true;
  } else if (record.objective_float) {
    j["objective"] = nullptr;
    j["objective_float"] = *record.objective_float;
    j["decimal5"] = decimal5(*record.objective_float);
    j["exact"] = false;
  } else {
    j["objective"] = nullptr;
    j["decimal5"] = nullptr;
  }
  j["seconds"] = record.seconds;
  if (!record.detail.empty()) j["detail"] = record.detail;
  return j;
}

ordered_json to_json(const GapEntry& gap) {
  ordered_json j;
  j["num"] = gap.num;
  j["den"] = gap.den;
  if (gap.ratio) {
    j["ratio"] = gap.ratio->to_string();
    j["decimal5"] = decimal5(*gap.ratio);
  } else {
    j["ratio"] = nullptr;
    j["ratio_float"] = gap.ratio_float.value_or(0.0);
    j["decimal5"] = decimal5(gap.ratio_float.value_or(0.0));
  }
  return j;
}

ordered_json to_json(const GapReport& report) {
  ordered_json j;
  j["instance"] = report.instance;
  j["params"] = report.params;
  j["results"] = ordered_json::array();
  for (const auto& r : report.results) j["results"].push_back(to_json(r));
  if (report.oracle) {
    j["oracle"] = {{"objective", report.oracle->to_string()}, {"decimal5", decimal5(*report.oracle)}};
  }
  j["gaps"] = ordered_json::array();
  for (const auto& g : report.gaps) j["gaps"].push_back(to_json(g));
  if (!report.closed_forms.empty()) j["closed_forms"] = report.closed_forms;
  if (!report.certificates.empty()) j["certificates"] = report.certificates;
  return j;
}

namespace {

std::string label_of(const FormulationKind& kind) { return to_string(kind); }

void add_closed_forms(GapReport& report, const FamilyParams& p) {
  ordered_json& c = report.closed_forms;
  auto put = [&](const char* key, const Rational& v) {
    c[key] = {{"value", v.to_string()}, {"decimal5", decimal5(v)}};
  };
  if (p.family == "simplex") {
    put("tree_cost", Rational(2 * p.s * p.d));
  } else if (p.family == "simplified") {
    Rational cost = closed_form_cost(p.d, p.s, p.delta);
    Rational tree(2 * p.s * p.d);
    put("constructed_cost", cost);
    put("tree_cost", tree);
    put("gap_bound", tree / cost);
    if (p.s == 3 * p.delta - 2 && p.s >= 4) put("gap_lower_bound", gap_lower_bound(p.d, p.s));
    if (report.results.size() >= 2 && report.results[1].objective) {
      c["plus_matches_tree_cost"] = *report.results[1].objective == tree;
    }
    if (!report.results.empty() && report.results[0].objective) {
      c["lp_within_constructed_cost"] = *report.results[0].objective <= cost;
    }
  } else if (p.family == "goemans") {
    put("fractional_cost", Rational(7 * p.d + 1, 2));
    put("tree_cost", Rational(4 * p.d));
    put("gap_bound", Rational(8 * p.d, 7 * p.d + 1));
  } else if (p.family == "dual") {
    put("constructed_cost", closed_form_cost(2, p.s, p.delta));
    put("multiway_cut", Rational(4 * p.s));
    put("ckr_gap", Rational(4 * p.s) / closed_form_cost(2, p.s, p.delta));
  } else if (p.family == "setcover" || p.family == "skutella") {
    SetCoverInstance fam = load_set_family(p);
    put("tree_cost", sci_opt_formula(fam, p.p, exact_set_cover(fam.sets()).size));
    put("fractional_bound", sci_fractional_bound(fam, p.p));
    put("gap_bound", sci_gap_bound(fam, p.p));
  }
}

}  // namespace

GapReport gap_report(const SteinerInstance& inst, const FamilyParams& params, const SolveConfig& config,
                     bool with_oracle) {
  GapReport report;
  report.instance = inst.name;
  report.params = params_json(params);
  VertexId root = -1;
  if (params.family == "setcover" && params.extended) root = inst.required.back();
  FormulationKind base{BaseFormulation::MCFR, false, root};
  FormulationKind plus{BaseFormulation::MCFR, true, root};
  report.results.push_back(solve_one(inst, base, config));
  report.results.push_back(solve_one(inst, plus, config));
  if (auto g = make_gap(label_of(plus), report.results[1], label_of(base), report.results[0])) {
    report.gaps.push_back(*g);
  }
  if (with_oracle) {
    try {
      report.oracle = exact_steiner_tree(inst).optimum;
      SolveRecord oracle_rec;
      oracle_rec.objective = report.oracle;
      if (auto g = make_gap("STP", oracle_rec, label_of(base), report.results[0])) report.gaps.push_back(*g);
    } catch (const SizeLimitExceeded&) {
      // Outside the oracle's guard; the report omits it.
    }
  }
  add_closed_forms(report, params);
  return report;
}

std::vector<GapReport> sweep(const std::vector<FamilyParams>& items, const SolveConfig& config, bool with_oracle,
                             int jobs) {
  std::vector<FamilyParams> sorted = items;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const FamilyParams& a, const FamilyParams& b) { return sort_key(a) < sort_key(b); });
  std::vector<GapReport> out(sorted.size());
  std::vector<std::function<void()>> tasks;
  for (size_t i = 0; i < sorted.size(); ++i) {
    tasks.emplace_back([&, i] {
      try {
        SteinerInstance inst = generate(sorted[i]);
        out[i] = gap_report(inst, sorted[i], config, with_oracle);
      } catch (const std::exception& e) {
        out[i].params = params_json(sorted[i]);
        SolveRecord failed;
        failed.status = "Failed";
        failed.detail = e.what();
        out[i].results.push_back(failed);
      }
    });
  }
  run_parallel(tasks, jobs);
  return out;
}

const std::vector<std::string>& published_table(const std::string& which) {
  static const std::vector<std::string> main_values = {"1.00000", "1.06666", "1.09459", "1.12116", "1.13939",
                                                       "1.15042", "1.16094", "1.16883", "1.17340"};
  static const std::vector<std::string> level2_values = {"1.00000", "1.06666", "1.09090", "1.10344", "1.12612",
                                                         "1.13513", "1.13953", "1.14927", "1.15384"};
  if (which == "main") return main_values;
  if (which == "level2") return level2_values;
  throw UsageError("unknown table '" + which + "' (expected main or level2)");
}

std::vector<TableRow> table(const std::string& which, int dmax, int exact_dmax, double tolerance,
                            std::optional<double> time_limit_secs, int jobs) {
  const auto& published = published_table(which);
  if (dmax < 1 || dmax > static_cast<int>(published.size())) {
    throw UsageError("--dmax must be in 1.." + std::to_string(published.size()));
  }
  std::vector<TableRow> rows(static_cast<size_t>(dmax));
  std::vector<SteinerInstance> instances(static_cast<size_t>(dmax));
  std::vector<FamilyParams> params(static_cast<size_t>(dmax));
  std::vector<std::string> errors(static_cast<size_t>(dmax));
  for (int d = 1; d <= dmax; ++d) {
    FamilyParams p;
    p.family = which == "main" ? "simplex" : "level2";
    p.d = d;
    p.s = d;
    p.lmax = 2;
    params[static_cast<size_t>(d - 1)] = p;
    rows[static_cast<size_t>(d - 1)].d = d;
    rows[static_cast<size_t>(d - 1)].exact = d <= exact_dmax;
    rows[static_cast<size_t>(d - 1)].expected = published[static_cast<size_t>(d - 1)];
  }
  // One task per (d, plus) pair so large rows do not serialize behind each other.
  std::vector<std::array<SolveRecord, 2>> records(static_cast<size_t>(dmax));
  std::vector<std::function<void()>> tasks;
  for (int d = dmax; d >= 1; --d) {
    const size_t i = static_cast<size_t>(d - 1);
    try {
      instances[i] = generate(params[i]);
    } catch (const std::exception& e) {
      errors[i] = e.what();
      continue;
    }
    for (int plus = 0; plus < 2; ++plus) {
      tasks.emplace_back([&, i, plus] {
        SolveConfig config{rows[i].exact, tolerance, time_limit_secs};
        try {
          records[i][static_cast<size_t>(plus)] =
              solve_one(instances[i], FormulationKind{BaseFormulation::MCFR, plus == 1, -1}, config);
        } catch (const std::exception& e) {
          SolveRecord failed;
          failed.kind = FormulationKind{BaseFormulation::MCFR, plus == 1, -1};
          failed.status = "Failed";
          failed.detail = e.what();
          records[i][static_cast<size_t>(plus)] = failed;
        }
      });
    }
  }
  run_parallel(tasks, jobs);
  for (size_t i = 0; i < rows.size(); ++i) {
    TableRow& row = rows[i];
    row.report.params = params_json(params[i]);
    if (!errors[i].empty()) {
      SolveRecord failed;
      failed.status = "Failed";
      failed.detail = errors[i];
      row.report.results.push_back(failed);
      continue;
    }
    row.report.instance = instances[i].name;
    row.report.results = {records[i][0], records[i][1]};
    auto g = make_gap(label_of(records[i][1].kind), records[i][1], label_of(records[i][0].kind), records[i][0]);
    if (g) {
      row.report.gaps.push_back(*g);
      row.value = g->ratio ? decimal5(*g->ratio) : decimal5(*g->ratio_float);
      row.matches = row.value == row.expected;
    }
  }
  return rows;
}

}  // namespace steiner_gap::cli
