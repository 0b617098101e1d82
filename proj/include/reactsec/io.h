// Copyright 2026 The reactsec Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef REACTSEC_IO_H_
#define REACTSEC_IO_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "reactsec/analysis.h"
#include "reactsec/engine.h"
#include "reactsec/horn.h"
#include "reactsec/model.h"

namespace reactsec::io {

// Version written as `format_version` in system files and accepted on load.
inline constexpr int kSystemFormatVersion = 1;
// Version written as `schema_version` in trace summaries.
inline constexpr int kTraceSchemaVersion = 1;

// Environment variable naming the default output directory.
inline constexpr const char* kOutputDirEnv = "REACTSEC_OUTPUT_DIR";

// ----------------------------------------------------------------------------
// System files.
//
// A system file is a YAML (or JSON) mapping:
//
//   format_version: 1
//   budget: 10
//   start: s
//   vertices:
//     - {id: s, reward: 0}
//     - {id: front, reward: 1}
//   edges:
//     - {id: left, from: s, to: front, surface: 5}
//
// A Horn system replaces `start`, `vertices` and `edges` with
//
//   horn:
//     propositions: [{id: p, reward: 0}, ...]
//     clauses: [{id: c1, antecedents: [], consequent: p, surface: 1}, ...]
//
// An optional `notes` key holds free text. Any other key is rejected.

using LoadedSystem = std::variant<System, HornSystem>;

// Throws IoError, SyntaxError, SchemaVersionError or ValidationError. Every
// validation violation carries a "line N" reference into the source text.
LoadedSystem ParseSystem(std::string_view text,
                         std::string_view source_name = "<string>");
LoadedSystem LoadSystem(const std::filesystem::path& path);

// Like LoadSystem but requires an attack graph.
System LoadGraphSystem(const std::filesystem::path& path);

// A path to an existing file is loaded; anything else is looked up as a
// fixture name (fig2, fig3, fig3:<n>, fig4, appendixB).
LoadedSystem ResolveSystem(std::string_view path_or_fixture);
System ResolveGraphSystem(std::string_view path_or_fixture);

// Text with 17 significant digits for every number, so that loading it
// reproduces the spec exactly. `comments` become leading "#" lines.
std::string EmitSystem(const SystemSpec& spec,
                       std::span<const std::string> comments = {});
std::string EmitHorn(const HornSpec& spec,
                     std::span<const std::string> comments = {});
void SaveSystem(const LoadedSystem& system, const std::filesystem::path& path,
                std::span<const std::string> comments = {});

// Writes every shipped fixture into `dir` and returns the written paths.
std::vector<std::filesystem::path> EmitFixtures(
    const std::filesystem::path& dir);

// ----------------------------------------------------------------------------
// Traces.
//
// A trace directory holds
//   trace.csv        t,attack,cost,payoff,revealed,beta
//   allocations.csv  t,edge,amount
//   summary.json     schema_version, totals, descriptors, seed, system
// Edge lists are ';'-joined edge ids; the attacks of a multi-attacker round
// are separated by '|'. Cost and payoff of such a round are the mean over its
// attackers. Numbers use 17 significant digits.

std::string TraceCsv(const GameTrace& trace);
std::string AllocationsCsv(const GameTrace& trace);
std::string TraceSummaryJson(const GameTrace& trace);

void WriteTrace(const GameTrace& trace, const std::filesystem::path& dir);
// Throws SchemaVersionError when summary.json has another schema version.
GameTrace ReadTrace(const std::filesystem::path& dir);

// Attack rounds from a trace.csv file, for replay by FixedSequenceAttacker.
std::vector<std::vector<Attack>> ReadAttackRounds(
    const std::filesystem::path& trace_csv, const System& system);

// ----------------------------------------------------------------------------
// Analysis outputs.

std::string BoundReportJson(const BoundReport& report);

struct SeededReport {
  std::uint64_t seed = 0;
  BoundReport report;
};

// JSON array of reports, each tagged with the seed of its replica.
std::string BoundReportsJson(std::span<const SeededReport> reports);
// t,average_regret,bound_rhs
std::string RegretCurveCsv(std::span<const RegretPoint> curve);

// ----------------------------------------------------------------------------
// Experiment configuration.

struct DefenderConfig {
  std::string algorithm = "reactive-hidden";
  std::optional<double> beta;
  std::optional<std::size_t> horizon;
};

struct AttackerConfig {
  std::string policy = "roa-best-response";
  std::uint64_t seed = 1;
  std::optional<std::vector<std::string>> visible_edges;
};

struct AnalysisConfig {
  bool regret = true;
  bool roa_ratio = false;
  std::optional<double> alpha;
};

struct ExperimentConfig {
  // Path (relative to the config file) or fixture name.
  std::string system;
  DefenderConfig defender;
  AttackerConfig attacker;
  // Empty means "use RoaThresholdT(system, alpha)".
  std::optional<std::size_t> rounds;
  std::size_t replicas = 1;
  std::filesystem::path output;
  AnalysisConfig analysis;
};

// Throws like LoadSystem; also rejects alpha <= 0 with roa_ratio enabled and
// a threshold horizon without alpha.
ExperimentConfig ParseExperimentConfig(std::string_view text,
                                       const std::filesystem::path& base_dir,
                                       std::string_view source_name);
ExperimentConfig LoadExperimentConfig(const std::filesystem::path& path);

// $REACTSEC_OUTPUT_DIR, or "reactsec-out" when unset.
std::filesystem::path DefaultOutputDir();

void WriteTextFile(const std::filesystem::path& path, std::string_view text);
std::string ReadTextFile(const std::filesystem::path& path);

// printf("%.17g"): enough digits for any double to read back unchanged.
std::string FormatNumber(double value);

}  // namespace reactsec::io

#endif  // REACTSEC_IO_H_
