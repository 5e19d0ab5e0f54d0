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

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "cli.hpp"
#include "steiner_gap/constructions.hpp"
#include "steiner_gap/embeddings.hpp"
#include "steiner_gap/formulations.hpp"
#include "steiner_gap/graph.hpp"
#include "steiner_gap/instances.hpp"
#include "steiner_gap/lp.hpp"
#include "steiner_gap/oracles.hpp"
#include "steiner_gap/serialization.hpp"
#include "steiner_gap/setcover.hpp"
#include "steiner_gap/solutions.hpp"
#include "steiner_gap/stp_io.hpp"

namespace {

using namespace steiner_gap;
using namespace steiner_gap::cli;
using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitError = 2;

std::string read_text(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
  if (!text.empty() && text.back() != '\n') out << '\n';
}

std::string sidecar_path(const std::string& stp_path) { return stp_path + ".labels.json"; }

// Loads an STP file plus its label sidecar. An explicit --labels path must
// exist; the default sidecar is optional.
SteinerInstance load_instance(const std::string& path, const std::string& labels) {
  SteinerInstance inst = read_stp_file(path);
  if (!labels.empty()) {
    apply_labels_json(inst, read_text(labels));
  } else if (std::filesystem::exists(sidecar_path(path))) {
    apply_labels_json(inst, read_text(sidecar_path(path)));
  }
  return inst;
}

// Vertex ids on the command line follow the STP file (1-based).
VertexId root_from_cli(const SteinerInstance& inst, int root) {
  if (root == 0) return -1;
  VertexId v = root - 1;
  if (v < 0 || v >= inst.num_vertices()) throw UsageError("--root is out of range");
  if (!inst.is_required(v)) throw UsageError("--root must be a terminal");
  return v;
}

int default_jobs() { return static_cast<int>(std::max(1u, std::min(4u, std::thread::hardware_concurrency()))); }

void add_family_options(CLI::App* cmd, FamilyParams& p) {
  cmd->add_option("--d", p.d, "Simplex dimension or Goemans parameter");
  cmd->add_option("--s", p.s, "Simplex size");
  cmd->add_option("--delta", p.delta, "Antenna length of the simplified instance");
  cmd->add_option("--lmax", p.lmax, "Highest edge level kept by level2");
  cmd->add_option("--n", p.n, "Skutella family parameter");
  cmd->add_option("--p", p.p, "Set-cover instance depth");
  cmd->add_option("--family", p.set_family, "Set family for setcover: triangle or skutella");
  cmd->add_option("--sets", p.sets_file, "JSON file with a set family (array of integer arrays)");
  cmd->add_flag("--extended", p.extended, "Add the pendant terminal to the set-cover instance");
}

// ---------------------------------------------------------------- gen

int cmd_gen(FamilyParams p, const std::string& out) {
  SteinerInstance inst = generate(p);
  write_stp_file(inst, out);
  write_text(sidecar_path(out), labels_to_json(inst));
  std::cout << "wrote " << out << ": " << inst.name << ", " << inst.num_vertices() << " vertices, "
            << inst.num_edges() << " edges, " << inst.required.size() << " terminals\n";
  return kExitPass;
}

// ---------------------------------------------------------------- solve

struct SolveArgs {
  std::string file;
  std::string labels;
  std::string formulation = "MCFR";
  bool plus = false;
  bool exact = false;
  double tolerance = 0.0;
  int root = 0;
  std::string report;
  std::string solution;
  bool oracle = false;
};

int cmd_solve(const SolveArgs& a) {
  SteinerInstance inst = load_instance(a.file, a.labels);
  FormulationKind kind{parse_base_formulation(a.formulation), a.plus, root_from_cli(inst, a.root)};
  SolveConfig config;
  config.exact = a.tolerance <= 0.0;
  if (!config.exact) config.tolerance = a.tolerance;
  config.time_limit_secs = time_limit_from_env();

  GapReport report;
  report.instance = inst.name;
  report.params = {{"file", a.file}};
  report.results.push_back(solve_one(inst, kind, config));
  const SolveRecord& rec = report.results.front();
  if (a.oracle) report.oracle = exact_steiner_tree(inst).optimum;
  if (!a.solution.empty() && rec.solution) {
    write_text(a.solution, solution_to_json(inst, kind, *rec.solution));
    report.certificates.push_back(a.solution);
  }
  if (report.oracle && rec.objective) {
    SolveRecord oracle_rec;
    oracle_rec.objective = report.oracle;
    if (auto g = make_gap("STP", oracle_rec, to_string(kind), rec)) report.gaps.push_back(*g);
  }
  std::string text = to_json(report).dump(2);
  if (a.report.empty()) {
    std::cout << text << "\n";
  } else {
    write_text(a.report, text);
    std::cout << to_string(kind) << " " << rec.status;
    if (rec.objective) std::cout << " " << rec.objective->to_string() << " (" << decimal5(*rec.objective) << ")";
    if (rec.objective_float) std::cout << " " << decimal5(*rec.objective_float) << " (float)";
    std::cout << "\n";
  }
  if (!rec.detail.empty()) std::cerr << rec.status << ": " << rec.detail << "\n";
  return rec.optimal() ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
  std::string instance;
  std::string solution;
  std::string labels;
  std::string formulation;
  bool plus = false;
  int root = 0;
};

int cmd_verify(const VerifyArgs& a) {
  SteinerInstance inst = load_instance(a.instance, a.labels);
  ParsedSolution parsed = solution_from_json(inst, read_text(a.solution));
  FormulationKind kind = parsed.kind;
  if (!a.formulation.empty() && parse_base_formulation(a.formulation) != kind.base) {
    throw UsageError("solution file holds a " + to_string(kind.base) + " solution, not " + a.formulation);
  }
  if (a.plus) kind.plus = true;
  if (a.root != 0) kind.root = root_from_cli(inst, a.root);
  std::string why;
  bool ok = verify(inst, kind, parsed.solution, &why);
  std::cout << (ok ? "PASS " : "FAIL ") << to_string(kind) << " objective "
            << solution_objective(inst, parsed.solution).to_string();
  if (!ok) std::cout << ": " << why;
  std::cout << "\n";
  return ok ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  std::string kind;
  FamilyParams family;
  std::string instance;
  std::string formulation = "MCFR";
  bool plus = false;
  std::string out;
};

int cmd_construct(ConstructArgs a) {
  SteinerInstance inst;
  FormulationKind kind;
  FormulationSolution sol;
  FamilyParams& p = a.family;
  if (a.kind == "goemans") {
    p.family = "goemans";
    inst = generate(p);
    McfrSolution m = goemans_fractional(inst);
    kind = FormulationKind{BaseFormulation::MCFR, false, m.root};
    sol = m;
  } else if (a.kind == "simplified") {
    p.family = "simplified";
    inst = generate(p);
    sol = simplified_simplex_solution(inst, p.d, p.s, p.delta);
    kind = FormulationKind{BaseFormulation::MBFR, false, -1};
  } else if (a.kind == "setcover") {
    p.family = "setcover";
    inst = generate(p);
    McfrSolution m = sci_fractional_solution(load_set_family(p), p.p, p.extended);
    kind = FormulationKind{BaseFormulation::MCFR, true, m.root};
    sol = m;
  } else if (a.kind == "tree") {
    if (a.instance.empty()) throw UsageError("construct tree needs --instance FILE");
    inst = load_instance(a.instance, "");
    kind = FormulationKind{parse_base_formulation(a.formulation), a.plus, -1};
    sol = steiner_tree_to_solution(inst, exact_steiner_tree(inst).tree, kind);
  } else {
    throw UsageError("unknown construction '" + a.kind + "' (expected goemans, simplified, setcover or tree)");
  }
  write_text(a.out, solution_to_json(inst, kind, sol));
  std::cout << "wrote " << a.out << ": " << to_string(kind) << " solution on " << inst.name << ", objective "
            << solution_objective(inst, sol).to_string() << "\n";
  return kExitPass;
}

// ---------------------------------------------------------------- table

struct TableArgs {
  std::string which;
  int dmax = 3;
  int exact_dmax = 3;
  double tolerance = 1e-6;
  int jobs = default_jobs();
  std::string report;
};

int cmd_table(const TableArgs& a) {
  std::vector<TableRow> rows = table(a.which, a.dmax, a.exact_dmax, a.tolerance, time_limit_from_env(), a.jobs);
  ordered_json all = ordered_json::array();
  bool all_match = true;
  std::cout << "d  mode   BCR       BCR+      gap      published  status\n";
  for (const TableRow& row : rows) {
    auto objective_text = [](const SolveRecord& r) -> std::string {
      if (r.objective) return r.objective->to_string();
      if (r.objective_float) return decimal5(*r.objective_float);
      return r.status;
    };
    std::string base = row.report.results.size() > 0 ? objective_text(row.report.results[0]) : "-";
    std::string plus = row.report.results.size() > 1 ? objective_text(row.report.results[1]) : "-";
    std::string status = row.value.empty() ? "UNAVAILABLE" : (row.matches ? "match" : "MISMATCH");
    all_match = all_match && row.matches;
    char line[256];
    std::snprintf(line, sizeof line, "%-2d %-6s %-9s %-9s %-8s %-10s %s", row.d, row.exact ? "exact" : "float",
                  base.c_str(), plus.c_str(), row.value.empty() ? "-" : row.value.c_str(), row.expected.c_str(),
                  status.c_str());
    std::cout << line << "\n";
    ordered_json j = to_json(row.report);
    j["table"] = {{"d", row.d}, {"mode", row.exact ? "exact" : "float"}, {"value", row.value},
                  {"published", row.expected}, {"matches", row.matches}};
    all.push_back(j);
  }
  if (!a.report.empty()) write_text(a.report, all.dump(2));
  return all_match ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------- gap

struct GapArgs {
  std::string family;
  std::vector<int> d{2};
  std::vector<int> s{2};
  std::vector<int> delta;
  std::vector<int> n{3};
  std::vector<int> p{1};
  int lmax = 2;
  std::string set_family = "triangle";
  bool extended = false;
  double tolerance = 0.0;
  bool oracle = false;
  int jobs = default_jobs();
  std::string report;
};

int cmd_gap(const GapArgs& a) {
  std::vector<FamilyParams> items;
  for (int d : a.d) {
    for (int s : a.s) {
      std::vector<int> deltas = a.delta;
      if (deltas.empty()) deltas.push_back((s + 2) / 3);
      for (int delta : deltas) {
        for (int n : a.n) {
          for (int p : a.p) {
            FamilyParams f;
            f.family = a.family;
            f.d = d;
            f.s = s;
            f.delta = delta;
            f.n = n;
            f.p = p;
            f.lmax = a.lmax;
            f.set_family = a.set_family;
            f.extended = a.extended;
            items.push_back(f);
          }
        }
      }
    }
  }
  // Collapse duplicates from parameters the family does not read.
  std::vector<FamilyParams> unique;
  std::vector<std::string> seen;
  for (const auto& f : items) {
    std::string key = params_json(f).dump();
    if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
      seen.push_back(key);
      unique.push_back(f);
    }
  }
  SolveConfig config;
  config.exact = a.tolerance <= 0.0;
  if (!config.exact) config.tolerance = a.tolerance;
  config.time_limit_secs = time_limit_from_env();
  std::vector<GapReport> reports = sweep(unique, config, a.oracle, a.jobs);
  ordered_json all = ordered_json::array();
  bool all_optimal = true;
  for (const auto& r : reports) {
    all.push_back(to_json(r));
    for (const auto& rec : r.results) all_optimal = all_optimal && rec.optimal();
  }
  if (a.report.empty()) {
    std::cout << all.dump(2) << "\n";
  } else {
    write_text(a.report, all.dump(2));
    for (const auto& r : reports) {
      std::cout << r.params.dump();
      for (const auto& g : r.gaps) {
        std::cout << "  " << g.num << "/" << g.den << " = "
                  << (g.ratio ? g.ratio->to_string() + " (" + decimal5(*g.ratio) + ")"
                              : decimal5(g.ratio_float.value_or(0.0)) + " (float)");
      }
      std::cout << "\n";
    }
  }
  return all_optimal ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------- oracle

int cmd_oracle(const std::string& file, const std::string& labels, bool multiway) {
  SteinerInstance inst = load_instance(file, labels);
  if (multiway) {
    MultiwayCutResult cut = exact_multiway_cut(inst);
    std::cout << "multiway cut " << cut.optimum.to_string() << "\n";
  } else {
    SteinerOracleResult tree = exact_steiner_tree(inst);
    std::cout << "steiner tree " << tree.optimum.to_string() << " (" << tree.tree.edges.size() << " edges)\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steiner tree LP relaxations: instance families, exact solves and integrality gaps"};
  app.require_subcommand(1);
  int exit_code = kExitPass;

  FamilyParams gen_params;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate an instance as STP plus a label sidecar");
  gen->add_option("FAMILY", gen_params.family, "Instance family")
      ->required()
      ->check(CLI::IsMember(known_families()));
  add_family_options(gen, gen_params);
  gen->add_option("--out", gen_out, "Output STP file")->required();
  gen->callback([&] { exit_code = cmd_gen(gen_params, gen_out); });

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Solve one LP relaxation and check its certificate");
  solve->add_option("file", solve_args.file, "STP instance")->required()->check(CLI::ExistingFile);
  solve->add_option("--labels", solve_args.labels, "Label sidecar (default FILE.labels.json when present)");
  solve->add_option("--formulation", solve_args.formulation, "BCR, MCFR, MBFR, MBCR or STER");
  solve->add_flag("--plus", solve_args.plus, "Add the Steiner-vertex degree constraints");
  auto* exact_flag = solve->add_flag("--exact", solve_args.exact, "Exact rational solve (default)");
  solve->add_option("--float", solve_args.tolerance, "Double-precision solve with this feasibility tolerance")
      ->excludes(exact_flag);
  solve->add_option("--root", solve_args.root, "Root terminal, 1-based as in the STP file");
  solve->add_option("--report", solve_args.report, "Write the report JSON here instead of stdout");
  solve->add_option("--solution", solve_args.solution, "Write the optimal solution JSON here");
  solve->add_flag("--oracle", solve_args.oracle, "Also compute the optimal Steiner tree");
  solve->callback([&] { exit_code = cmd_solve(solve_args); });

  VerifyArgs verify_args;
  auto* verify_cmd = app.add_subcommand("verify", "Check a solution file against a formulation");
  verify_cmd->add_option("instance", verify_args.instance, "STP instance")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("solution", verify_args.solution, "Solution JSON")->required()->check(CLI::ExistingFile);
  verify_cmd->add_option("--labels", verify_args.labels, "Label sidecar");
  verify_cmd->add_option("--formulation", verify_args.formulation, "Expected base formulation");
  verify_cmd->add_flag("--plus", verify_args.plus, "Also require the Steiner-vertex degree constraints");
  verify_cmd->add_option("--root", verify_args.root, "Root terminal, 1-based as in the STP file");
  verify_cmd->callback([&] { exit_code = cmd_verify(verify_args); });

  ConstructArgs construct_args;
  auto* construct = app.add_subcommand("construct", "Write an explicit solution for a generated instance");
  construct->add_option("kind", construct_args.kind, "goemans, simplified, setcover or tree")->required();
  add_family_options(construct, construct_args.family);
  construct->add_option("--instance", construct_args.instance, "STP instance (tree only)");
  construct->add_option("--formulation", construct_args.formulation, "Formulation for tree");
  construct->add_flag("--plus", construct_args.plus, "Plus variant for tree");
  construct->add_option("--out", construct_args.out, "Output solution JSON")->required();
  construct->callback([&] { exit_code = cmd_construct(construct_args); });

  TableArgs table_args;
  auto* table_cmd = app.add_subcommand("table", "Reproduce a gap table and compare with the published values");
  table_cmd->add_option("which", table_args.which, "main or level2")
      ->required()
      ->check(CLI::IsMember({"main", "level2"}));
  table_cmd->add_option("--dmax", table_args.dmax, "Largest dimension")->check(CLI::Range(1, 9));
  table_cmd->add_option("--exact-dmax", table_args.exact_dmax, "Largest dimension solved exactly");
  table_cmd->add_option("--tolerance", table_args.tolerance, "Float solver tolerance beyond --exact-dmax");
  table_cmd->add_option("--jobs", table_args.jobs, "Concurrent solves")->check(CLI::PositiveNumber);
  table_cmd->add_option("--report", table_args.report, "Write the per-row reports as JSON");
  table_cmd->callback([&] { exit_code = cmd_table(table_args); });

  GapArgs gap_args;
  auto* gap = app.add_subcommand("gap", "Gap sweep over a parameter grid");
  gap->add_option("FAMILY", gap_args.family, "Instance family")
      ->required()
      ->check(CLI::IsMember(known_families()));
  gap->add_option("--d", gap_args.d, "Dimensions")->delimiter(',');
  gap->add_option("--s", gap_args.s, "Sizes")->delimiter(',');
  gap->add_option("--delta", gap_args.delta, "Antenna lengths (default floor((s+2)/3))")->delimiter(',');
  gap->add_option("--n", gap_args.n, "Skutella parameters")->delimiter(',');
  gap->add_option("--p", gap_args.p, "Set-cover depths")->delimiter(',');
  gap->add_option("--lmax", gap_args.lmax, "Highest edge level kept by level2");
  gap->add_option("--family", gap_args.set_family, "Set family for setcover");
  gap->add_flag("--extended", gap_args.extended, "Extended set-cover instances");
  gap->add_option("--float", gap_args.tolerance, "Double-precision solves with this tolerance");
  gap->add_flag("--oracle", gap_args.oracle, "Include the optimal Steiner tree when within size guards");
  gap->add_option("--jobs", gap_args.jobs, "Concurrent items")->check(CLI::PositiveNumber);
  gap->add_option("--report", gap_args.report, "Write the reports as JSON instead of stdout");
  gap->callback([&] { exit_code = cmd_gap(gap_args); });

  std::string oracle_file;
  std::string oracle_labels;
  bool multiway = false;
  auto* oracle = app.add_subcommand("oracle", "Exact Steiner tree or multiway cut");
  oracle->add_option("file", oracle_file, "STP instance")->required()->check(CLI::ExistingFile);
  oracle->add_option("--labels", oracle_labels, "Label sidecar");
  oracle->add_flag("--multiway", multiway, "Solve multiway cut on the terminals instead");
  oracle->callback([&] { exit_code = cmd_oracle(oracle_file, oracle_labels, multiway); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitPass : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return exit_code;
}
