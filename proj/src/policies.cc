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

#include "reactsec/policies.h"

#include <set>

namespace reactsec::io {
namespace {

std::vector<std::string> SplitOn(std::string_view text, char sep) {
  std::vector<std::string> out;
  std::size_t begin = 0;
  while (true) {
    const std::size_t end = text.find(sep, begin);
    out.emplace_back(text.substr(begin, end - begin));
    if (end == std::string_view::npos) break;
    begin = end + 1;
  }
  return out;
}

std::optional<std::set<UnitId>> VisibleSet(
    const std::optional<std::vector<std::string>>& names,
    const System& system) {
  if (!names) return std::nullopt;
  std::set<UnitId> out;
  for (const std::string& name : *names) {
    auto id = system.FindEdge(name);
    if (!id) throw InvalidArgument("visible edge '" + name + "' is unknown");
    out.insert(*id);
  }
  return out;
}

std::unique_ptr<Attacker> MakeOne(const std::string& policy,
                                  const AttackerConfig& config,
                                  const System& system) {
  if (policy == "roa-best-response" || policy == "profit-best-response") {
    return std::make_unique<BestResponseAttacker>(
        policy == "roa-best-response" ? Objective::kRoa : Objective::kProfit,
        VisibleSet(config.visible_edges, system));
  }
  if (policy == "oblivious-subgraph") {
    if (!config.visible_edges) {
      throw InvalidArgument("oblivious-subgraph needs a visible edge list");
    }
    return std::make_unique<BestResponseAttacker>(
        Objective::kRoa, VisibleSet(config.visible_edges, system));
  }
  if (policy == "uniform-random-edge-path") {
    return std::make_unique<UniformRandomPathAttacker>();
  }
  if (policy == "random-parallel") {
    return std::make_unique<RandomParallelAttacker>();
  }
  constexpr std::string_view kFixed = "fixed-sequence:";
  if (policy.starts_with(kFixed)) {
    const std::filesystem::path path = policy.substr(kFixed.size());
    return std::make_unique<FixedSequenceAttacker>(
        ReadAttackRounds(path, system));
  }
  throw InvalidArgument("unknown attacker policy '" + policy + "'");
}

}  // namespace

std::unique_ptr<Defender> MakeDefender(const DefenderConfig& config,
                                       std::size_t rounds) {
  const std::string& name = config.algorithm;
  if (name == "reactive-hidden") {
    return std::make_unique<ReactiveHiddenDefender>(config.beta);
  }
  if (name == "reactive-known") {
    std::optional<std::size_t> horizon = config.horizon;
    if (!horizon && !config.beta) horizon = rounds;
    return std::make_unique<ReactiveKnownDefender>(horizon, config.beta);
  }
  if (config.beta || config.horizon) {
    throw InvalidArgument("defender '" + name +
                          "' takes no beta or horizon parameter");
  }
  if (name == "myopic") return std::make_unique<MyopicDefender>();
  if (name == "uniform") return std::make_unique<UniformDefender>();
  if (name == "minimax-roa") {
    return std::make_unique<MinimaxDefender>(Objective::kRoa);
  }
  if (name == "minimax-profit") {
    return std::make_unique<MinimaxDefender>(Objective::kProfit);
  }
  constexpr std::string_view kMincut = "mincut:";
  if (name.starts_with(kMincut)) {
    return std::make_unique<PerimeterDefender>(name.substr(kMincut.size()));
  }
  throw InvalidArgument("unknown defender '" + name + "'");
}

std::unique_ptr<Attacker> MakeAttacker(const AttackerConfig& config,
                                       const System& system) {
  constexpr std::string_view kMulti = "multi:";
  if (config.policy.starts_with(kMulti)) {
    std::vector<std::unique_ptr<Attacker>> members;
    for (const std::string& part :
         SplitOn(std::string_view(config.policy).substr(kMulti.size()), '+')) {
      members.push_back(MakeOne(part, config, system));
    }
    return std::make_unique<MultiAttacker>(std::move(members));
  }
  return MakeOne(config.policy, config, system);
}

std::vector<std::string> DefenderNames() {
  return {"reactive-hidden", "reactive-known", "myopic",        "uniform",
          "minimax-roa",     "minimax-profit", "mincut:<vertex>"};
}

std::vector<std::string> AttackerNames() {
  return {"roa-best-response",     "profit-best-response",
          "oblivious-subgraph",    "uniform-random-edge-path",
          "random-parallel",       "fixed-sequence:<trace.csv>",
          "multi:<name>+<name>+..."};
}

}  // namespace reactsec::io
