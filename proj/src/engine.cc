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

#include "reactsec/engine.h"

#include <vector>

namespace reactsec {

double GameTrace::total_payoff() const {
  double total = 0.0;
  for (const RoundRecord& r : rounds) total += r.payoff;
  return total;
}

double GameTrace::total_cost() const {
  double total = 0.0;
  for (const RoundRecord& r : rounds) total += r.cost;
  return total;
}

ExtendedReal GameTrace::cumulative_roa() const {
  std::vector<double> payoffs;
  std::vector<double> costs;
  for (const RoundRecord& r : rounds) {
    payoffs.push_back(r.payoff);
    costs.push_back(r.cost);
  }
  return CumulativeRoa(payoffs, costs);
}

MaskedView MakeMaskedView(const System& system,
                          const std::set<UnitId>& revealed) {
  return MaskedView(system, revealed);
}

namespace {

void CheckAllocation(const System& system, const DefenseAllocation& d,
                     const std::set<UnitId>& revealed, bool reactive) {
  if (d.budget() != system.budget()) {
    throw InfeasibleAllocation("allocation was built for a different budget");
  }
  for (const auto& [id, amount] : d.amounts()) {
    if (id.value >= system.num_edges()) {
      throw InfeasibleAllocation("allocation funds unknown edge #" +
                                 std::to_string(id.value));
    }
    if (reactive && amount != 0.0 && !revealed.contains(id)) {
      throw Error("E-OBLIVIOUS", "reactive defender funded unrevealed edge '" +
                                     system.edge(id).name + "'");
    }
  }
}

RoundRecord PlayRound(const System& system, Defender& defender,
                      Attacker& attacker, std::size_t t,
                      std::set<UnitId>& revealed, Rng& rng) {
  const bool reactive = defender.knowledge() == Knowledge::kRevealedOnly;
  RoundRecord record;
  record.t = t;

  // 1. Commit. The defender gets no argument describing this round's attack.
  {
    const MaskedView view(system, revealed);
    const DefenderView input{t, view, reactive ? nullptr : &system};
    record.allocation = defender.Commit(input);
    record.beta = defender.beta();
  }
  CheckAllocation(system, record.allocation, revealed, reactive);

  // 2. Attack with full knowledge of the allocation.
  record.attacks = attacker.Choose(system, record.allocation, t, rng);
  if (record.attacks.empty()) {
    throw InvalidAttack("attacker " + attacker.Describe() +
                        " returned no attack");
  }
  Observation observation;
  observation.round = t;
  for (const Attack& a : record.attacks) {
    ValidateAttack(system, a);
    if (a.empty()) throw InvalidAttack("attacks must be non-empty paths");
    for (UnitId id : a.path) {
      observation.surfaces.emplace(id, system.surface(id));
      if (revealed.insert(id).second) record.revealed.push_back(id);
    }
  }
  if (record.attacks.size() > 1) {
    record.distribution = AggregateMultiAttack(record.attacks);
  }

  // 3. Reveal.
  observation.attacks = record.attacks;
  observation.distribution = record.distribution;
  defender.Observe(observation);

  // 4. Account.
  double cost = 0.0;
  double payoff = 0.0;
  for (const Attack& a : record.attacks) {
    cost += Cost(system, a, record.allocation);
    payoff += Payoff(system, a);
  }
  const double k = static_cast<double>(record.attacks.size());
  record.cost = record.attacks.size() == 1 ? cost : cost / k;
  record.payoff = record.attacks.size() == 1 ? payoff : payoff / k;
  return record;
}

}  // namespace

GameTrace RunGame(const System& system, Defender& defender, Attacker& attacker,
                  std::size_t rounds, std::uint64_t seed) {
  if (rounds == 0) throw InvalidArgument("a game needs at least one round");
  GameTrace trace{system, {}, defender.Describe(), attacker.Describe(), seed};
  trace.rounds.reserve(rounds);
  Rng rng(seed);
  std::set<UnitId> revealed;
  for (std::size_t t = 1; t <= rounds; ++t) {
    try {
      trace.rounds.push_back(
          PlayRound(system, defender, attacker, t, revealed, rng));
    } catch (const Error& e) {
      throw Error(e.code(), "round " + std::to_string(t) + ": " + e.what());
    }
  }
  return trace;
}

}  // namespace reactsec
