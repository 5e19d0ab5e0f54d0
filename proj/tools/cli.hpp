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

#ifndef STEINER_GAP_TOOLS_CLI_HPP_
#define STEINER_GAP_TOOLS_CLI_HPP_

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "steiner_gap/formulations.hpp"
#include "steiner_gap/graph.hpp"
#include "steiner_gap/rational.hpp"
#include "steiner_gap/setcover.hpp"
#include "steiner_gap/solutions.hpp"

namespace steiner_gap::cli {

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters shared by every instance family. Unused fields are ignored.
struct FamilyParams {
  std::string family;
  int d = 2;
  int s = 2;
  int delta = 1;
  int lmax = 2;
  int n = 3;
  int p = 1;
  std::string set_family = "triangle";  // triangle | skutella
  std::string sets_file;                  // JSON set family, overrides set_family
  bool extended = false;
};

const std::vector<std::string>& known_families();
SetCoverInstance load_set_family(const FamilyParams& params);
SteinerInstance generate(const FamilyParams& params);
// Only the parameters the family reads, in a fixed key order.
nlohmann::ordered_json params_json(const FamilyParams& params);

struct SolveConfig {
  bool exact = true;
  double tolerance = 1e-6;
  std::optional<double> time_limit_secs;
};

// Reads STEINER_GAP_TIME_LIMIT_SECS; unset or empty means no limit.
std::optional<double> time_limit_from_env();

struct SolveRecord {
  FormulationKind kind;
  // Optimal, Infeasible, Unbounded, TimedOut, CertificateRejected or Failed.
  std::string status;
  std::optional<Rational> objective;       // exact solves
  std::optional<double> objective_float;   // float solves
  double seconds = 0.0;
  std::optional<FormulationSolution> solution;
  std::string detail;

  bool optimal() const { return status == "Optimal"; }
};

// Compiles, solves and checks one formulation. Exact optima are accepted
// only after the LP certificate and the formulation verifier both pass.
SolveRecord solve_one(const SteinerInstance& inst, const FormulationKind& kind, const SolveConfig& config);

// Truncation to five decimals. Float values are first rounded to 1e-9 so
// solver noise just below an exact value does not lose a digit.
std::string decimal5(const Rational& value);
std::string decimal5(double value);

struct GapEntry {
  std::string num;
  std::string den;
  std::optional<Rational> ratio;
  std::optional<double> ratio_float;
};

std::optional<GapEntry> make_gap(const std::string& num_label, const SolveRecord& num,
                                 const std::string& den_label, const SolveRecord& den);

struct GapReport {
  std::string instance;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  std::vector<SolveRecord> results;
  std::optional<Rational> oracle;
  std::vector<GapEntry> gaps;
  std::vector<std::string> certificates;
  nlohmann::ordered_json closed_forms = nlohmann::ordered_json::object();
};

nlohmann::ordered_json to_json(const SolveRecord& record);
nlohmann::ordered_json to_json(const GapEntry& gap);
nlohmann::ordered_json to_json(const GapReport& report);

// MCFR and MCFR-plus optima, their ratio, and the oracle optimum when the
// instance is within the oracle's size guard and `with_oracle` is set.
GapReport gap_report(const SteinerInstance& inst, const FamilyParams& params, const SolveConfig& config,
                     bool with_oracle);

// Items run concurrently on up to `jobs` threads; the result is sorted by
// parameters regardless of completion order.
std::vector<GapReport> sweep(const std::vector<FamilyParams>& items, const SolveConfig& config,
                             bool with_oracle, int jobs);

struct TableRow {
  int d = 0;
  bool exact = false;
  GapReport report;
  std::string value;      // five-decimal truncation, empty when unavailable
  std::string expected;   // published value
  bool matches = false;
};

const std::vector<std::string>& published_table(const std::string& which);
std::vector<TableRow> table(const std::string& which, int dmax, int exact_dmax, double tolerance,
                            std::optional<double> time_limit_secs, int jobs);

}  // namespace steiner_gap::cli

#endif  // STEINER_GAP_TOOLS_CLI_HPP_
