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

// Command-line front end: simulate games, solve proactive defenses, check the
// learning bounds and emit the shipped fixtures.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <mutex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "reactsec/analysis.h"
#include "reactsec/defense.h"
#include "reactsec/engine.h"
#include "reactsec/io.h"
#include "reactsec/policies.h"

namespace {

using namespace reactsec;

constexpr int kExitOk = 0;
constexpr int kExitInternal = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBoundViolated = 3;
constexpr int kExitIo = 4;
constexpr int kExitSyntax = 5;
constexpr int kExitValidation = 6;
constexpr int kExitGame = 7;
constexpr int kExitEnumeration = 8;
constexpr int kExitSolver = 9;

int ExitCodeFor(const std::string& code) {
  if (code == "E-IO") return kExitIo;
  if (code == "E-SYNTAX" || code == "E-SCHEMA-VERSION") return kExitSyntax;
  if (code == "E-ARGUMENT") return kExitUsage;
  if (code == "E-ATTACK" || code == "E-ALLOCATION" || code == "E-OBLIVIOUS") {
    return kExitGame;
  }
  if (code == "E-ENUMERATION") return kExitEnumeration;
  if (code == "E-LP") return kExitSolver;
  return kExitValidation;
}

std::string Num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string Num(const ExtendedReal& v) {
  return v.is_finite() ? Num(v.value()) : v.ToString();
}

void PrintAllocation(const System& system, const DefenseAllocation& d) {
  std::cout << "allocation:\n";
  for (const System::Edge& e : system.edges()) {
    std::cout << "  " << e.name << ": " << Num(d.at(e.id)) << "\n";
  }
}

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// ----------------------------------------------------------------------------

struct SimulateArgs {
  std::string system;
  std::string defender = "reactive-hidden";
  std::string attacker = "roa-best-response";
  std::string visible;
  std::optional<double> beta;
  std::optional<std::size_t> horizon;
  std::size_t rounds = 100;
  std::uint64_t seed = 1;
  std::string out;
};

int Simulate(const SimulateArgs& args) {
  const System system = io::ResolveGraphSystem(args.system);
  io::DefenderConfig dc{args.defender, args.beta, args.horizon};
  io::AttackerConfig ac;
  ac.policy = args.attacker;
  ac.seed = args.seed;
  if (!args.visible.empty()) ac.visible_edges = SplitCommas(args.visible);
  auto defender = io::MakeDefender(dc, args.rounds);
  auto attacker = io::MakeAttacker(ac, system);
  const GameTrace trace =
      RunGame(system, *defender, *attacker, args.rounds, args.seed);
  const std::filesystem::path out =
      args.out.empty() ? io::DefaultOutputDir() : std::filesystem::path(args.out);
  io::WriteTrace(trace, out);
  std::cout << "defender: " << trace.defender << "\n"
            << "attacker: " << trace.attacker << "\n"
            << "T: " << trace.horizon() << "\n"
            << "total_payoff: " << Num(trace.total_payoff()) << "\n"
            << "total_cost: " << Num(trace.total_cost()) << "\n"
            << "cumulative_roa: " << Num(trace.cumulative_roa()) << "\n"
            << "trace: " << out.string() << "\n";
  return kExitOk;
}

int Minimax(const std::string& path, const std::string& objective,
            std::size_t limit) {
  const System system = io::ResolveGraphSystem(path);
  const MinimaxDefense result =
      MinimaxProactiveDefense(system, ParseObjective(objective), limit);
  std::cout << "objective: " << objective << "\n"
            << "attacks: " << result.num_attacks << "\n";
  PrintAllocation(system, result.allocation);
  std::cout << "value: " << Num(result.value) << "\n";
  return kExitOk;
}

int Mincut(const std::string& path, const std::string& target) {
  const System system = io::ResolveGraphSystem(path);
  const auto v = system.FindVertex(target);
  if (!v) throw InvalidArgument("unknown target vertex '" + target + "'");
  const PerimeterDefense result = MinCutPerimeterDefense(system, *v);
  std::cout << "target: " << target << "\ncut:";
  for (UnitId id : result.cut) std::cout << " " << system.edge(id).name;
  std::cout << "\ncut_weight: " << Num(result.cut_weight) << "\n";
  PrintAllocation(system, result.allocation);
  return kExitOk;
}

int LowerBound(std::size_t rounds, const std::string& seeds,
               std::uint64_t base_seed) {
  if (seeds == "exhaustive") {
    const ExactLowerBound exact = ExactLowerBoundGap(rounds);
    std::cout << "T: " << exact.horizon << "\n"
              << "sequences: " << exact.num_sequences << "\n"
              << "expected_gap: " << Num(exact.expected_gap) << "\n"
              << "expected_gap_over_sqrt_T: "
              << Num(exact.expected_gap / std::sqrt(double(rounds))) << "\n"
              << "expected_gap_reactive_hidden: "
              << Num(exact.expected_gap_reactive) << "\n"
              << "expected_cost_reactive_hidden: "
              << Num(exact.expected_reactive_cost) << "\n";
    return kExitOk;
  }
  std::size_t count = 0;
  try {
    std::size_t pos = 0;
    count = std::stoull(seeds, &pos);
    if (pos != seeds.size()) throw std::invalid_argument(seeds);
  } catch (const std::exception&) {
    throw InvalidArgument("--seeds takes a count or 'exhaustive'");
  }
  const LowerBoundStats stats = LowerBoundExperiment(rounds, count, base_seed);
  std::cout << "T: " << stats.horizon << "\n"
            << "seeds: " << stats.num_seeds << "\n"
            << "mean_reactive_cost: " << Num(stats.mean_reactive_cost) << "\n"
            << "mean_hindsight_cost: " << Num(stats.mean_hindsight_cost) << "\n"
            << "mean_gap: " << Num(stats.mean_gap) << "\n"
            << "mean_gap_over_sqrt_T: " << Num(stats.mean_gap_over_sqrt_t)
            << "\n";
  return kExitOk;
}

int EmitFixtures(const std::string& dir) {
  for (const auto& path : io::EmitFixtures(dir)) {
    std::cout << path.string() << "\n";
  }
  return kExitOk;
}

// ----------------------------------------------------------------------------

struct ReplicaResult {
  std::uint64_t seed = 0;
  std::vector<BoundReport> reports;
  std::string error_code;
  std::string error;
};

ReplicaResult RunReplica(const io::ExperimentConfig& config,
                         const System& system, std::size_t rounds,
                         std::uint64_t seed) {
  ReplicaResult result;
  result.seed = seed;
  try {
    auto defender = io::MakeDefender(config.defender, rounds);
    io::AttackerConfig ac = config.attacker;
    ac.seed = seed;
    auto attacker = io::MakeAttacker(ac, system);
    const GameTrace trace = RunGame(system, *defender, *attacker, rounds, seed);
    const std::filesystem::path dir =
        config.output / ("replica-" + std::to_string(seed));
    io::WriteTrace(trace, dir);
    if (config.analysis.regret) {
      result.reports.push_back(ProfitRegret(trace, system));
      io::WriteTextFile(dir / "regret_curve.csv",
                        io::RegretCurveCsv(RegretCurve(trace, system)));
    }
    if (config.analysis.roa_ratio) {
      result.reports.push_back(RoaRatio(trace, system, *config.analysis.alpha));
    }
    std::vector<io::SeededReport> tagged;
    for (const BoundReport& report : result.reports) {
      tagged.push_back({result.seed, report});
    }
    io::WriteTextFile(dir / "bounds.json", io::BoundReportsJson(tagged));
  } catch (const Error& e) {
    result.error_code = e.code();
    result.error = e.what();
  }
  return result;
}

int VerifyBounds(const std::string& config_path, unsigned threads) {
  const io::ExperimentConfig config = io::LoadExperimentConfig(config_path);
  const System system = io::ResolveGraphSystem(config.system);
  const std::size_t rounds =
      config.rounds ? *config.rounds
                    : RoaThresholdT(system, *config.analysis.alpha);

  std::vector<ReplicaResult> results(config.replicas);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < results.size(); i = next++) {
      results[i] = RunReplica(config, system, rounds, config.attacker.seed + i);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(results.size()));
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  // Results are merged in seed order, independent of scheduling.
  bool all_satisfied = true;
  std::vector<io::SeededReport> merged;
  for (const ReplicaResult& r : results) {
    if (!r.error.empty()) {
      std::cerr << "error: seed " << r.seed << ": [" << r.error_code << "] "
                << r.error << "\n";
      return ExitCodeFor(r.error_code);
    }
    for (const BoundReport& report : r.reports) {
      all_satisfied = all_satisfied && report.satisfied;
      std::cout << "seed " << r.seed << " " << report.name << ": measured "
                << Num(report.measured) << " bound " << Num(report.bound_rhs)
                << (report.satisfied ? " ok" : " VIOLATED") << "\n";
      merged.push_back({r.seed, report});
    }
  }
  io::WriteTextFile(config.output / "bounds.json", io::BoundReportsJson(merged));
  std::cout << "T: " << rounds << "\nreplicas: " << results.size() << "\n"
            << (all_satisfied ? "all bounds satisfied" : "bound violated")
            << "\n";
  return all_satisfied ? kExitOk : kExitBoundViolated;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Repeated security games between reactive defenders and attackers on "
      "attack graphs."};
  app.require_subcommand(1);
  const std::string system_help =
      "System file (YAML/JSON) or fixture name: fig2, fig3, fig3:<n>, fig4, "
      "appendixB";

  SimulateArgs sim;
  auto* simulate = app.add_subcommand("simulate", "Play one game and write its trace");
  simulate->add_option("--system", sim.system, system_help)->required();
  std::string defender_help = "Defender:";
  for (const auto& n : io::DefenderNames()) defender_help += " " + n;
  std::string attacker_help = "Attacker:";
  for (const auto& n : io::AttackerNames()) attacker_help += " " + n;
  simulate->add_option("--defender", sim.defender, defender_help)
      ->capture_default_str();
  simulate->add_option("--attacker", sim.attacker, attacker_help)
      ->capture_default_str();
  simulate->add_option("--visible", sim.visible,
                       "Comma-separated edges a best-responding attacker sees");
  simulate->add_option("--beta", sim.beta, "Fixed learning rate in (0, 1)");
  simulate->add_option("--horizon", sim.horizon,
                       "Horizon for the known-edge defender's learning rate");
  simulate->add_option("-T,--rounds", sim.rounds, "Number of rounds")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  simulate->add_option("--seed", sim.seed, "Random seed")->capture_default_str();
  simulate->add_option("--out", sim.out,
                       std::string("Output directory (default $") +
                           io::kOutputDirEnv + " or reactsec-out)");

  std::string mm_system;
  std::string mm_objective = "roa";
  std::size_t mm_limit = kDefaultEnumerationLimit;
  auto* minimax = app.add_subcommand(
      "minimax", "Best fixed defense against a rational attacker");
  minimax->add_option("--system", mm_system, system_help)->required();
  minimax->add_option("--objective", mm_objective, "roa or profit")
      ->capture_default_str()
      ->check(CLI::IsMember({"roa", "profit"}));
  minimax->add_option("--limit", mm_limit, "Attack enumeration limit")
      ->capture_default_str();

  std::string mc_system;
  std::string mc_target;
  auto* mincut = app.add_subcommand(
      "mincut", "Perimeter defense on a minimum-weight cut");
  mincut->add_option("--system", mc_system, system_help)->required();
  mincut->add_option("--target", mc_target, "Target vertex")->required();

  std::string vb_config;
  unsigned vb_threads = 0;
  auto* verify = app.add_subcommand(
      "verify-bounds",
      "Run an experiment config and check the regret and ROA ratio bounds "
      "(exit 3 on violation)");
  verify->add_option("--config", vb_config, "Experiment config (YAML)")
      ->required();
  verify->add_option("--threads", vb_threads,
                     "Worker threads (0 = one per core)")
      ->capture_default_str();

  std::size_t lb_rounds = 1000;
  std::string lb_seeds = "100";
  std::uint64_t lb_base = 1;
  auto* lower = app.add_subcommand(
      "lower-bound", "Random attacks on two parallel edges: regret gap");
  lower->add_option("-T,--rounds", lb_rounds, "Number of rounds")
      ->capture_default_str();
  lower->add_option("--seeds", lb_seeds,
                    "Number of games, or 'exhaustive' for all 2^T sequences")
      ->capture_default_str();
  lower->add_option("--base-seed", lb_base, "First seed")->capture_default_str();

  std::string fx_dir;
  auto* fixtures_cmd = app.add_subcommand("fixtures", "Write the shipped fixture files");
  fixtures_cmd->add_option("--emit", fx_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*simulate) return Simulate(sim);
    if (*minimax) return Minimax(mm_system, mm_objective, mm_limit);
    if (*mincut) return Mincut(mc_system, mc_target);
    if (*verify) return VerifyBounds(vb_config, vb_threads);
    if (*lower) return LowerBound(lb_rounds, lb_seeds, lb_base);
    if (*fixtures_cmd) return EmitFixtures(fx_dir);
  } catch (const ValidationError& e) {
    std::cerr << "error: [" << e.code() << "]\n" << e.what() << "\n";
    return kExitValidation;
  } catch (const Error& e) {
    std::cerr << "error: [" << e.code() << "] " << e.what() << "\n";
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
