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

#ifndef REACTSEC_ENGINE_H_
#define REACTSEC_ENGINE_H_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "reactsec/attackers.h"
#include "reactsec/defenders.h"
#include "reactsec/model.h"
#include "reactsec/view.h"

namespace reactsec {

struct RoundRecord {
  std::size_t t = 0;
  DefenseAllocation allocation{1.0};
  std::vector<Attack> attacks;
  // Edge usage distribution when the round had several attackers.
  std::map<UnitId, double> distribution;
  // Mean over the round's attacks.
  double cost = 0.0;
  double payoff = 0.0;
  // Edges first used in this round, in order of first use.
  std::vector<UnitId> revealed;
  // Learning rate behind `allocation`, for policies that have one.
  std::optional<double> beta;
};

struct GameTrace {
  System system;
  std::vector<RoundRecord> rounds;
  std::string defender;
  std::string attacker;
  std::uint64_t seed = 0;

  std::size_t horizon() const { return rounds.size(); }
  double total_payoff() const;
  double total_cost() const;
  ExtendedReal cumulative_roa() const;
};

// The defender's window onto the system after `revealed` edges were used.
MaskedView MakeMaskedView(const System& system,
                          const std::set<UnitId>& revealed);

// Plays `rounds` rounds. Each round the defender commits first (reactive
// defenders see only a MaskedView of edges revealed so far), then the
// attacker answers with full knowledge of the allocation, then the round's
// edges and surfaces are revealed and cost and payoff are recorded.
//
// Errors raised by either policy are rethrown with the round number
// prepended. A reactive defender that funds an unrevealed edge is an error.
GameTrace RunGame(const System& system, Defender& defender, Attacker& attacker,
                  std::size_t rounds, std::uint64_t seed);

}  // namespace reactsec

#endif  // REACTSEC_ENGINE_H_
