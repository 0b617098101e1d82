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

#ifndef REACTSEC_HORN_H_
#define REACTSEC_HORN_H_

#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reactsec/model.h"

namespace reactsec {

struct PropositionSpec {
  std::string id;
  double reward = 0.0;
  bool operator==(const PropositionSpec&) const = default;
};

struct ClauseSpec {
  std::string id;
  std::vector<std::string> antecedents;
  std::string consequent;
  double surface = 1.0;
  bool operator==(const ClauseSpec&) const = default;
};

struct HornSpec {
  std::vector<PropositionSpec> propositions;
  std::vector<ClauseSpec> clauses;
  double budget = 1.0;
  bool operator==(const HornSpec&) const = default;
};

std::vector<Violation> ValidateHorn(const HornSpec& spec);

struct PropositionId {
  std::uint32_t value = 0;
  auto operator<=>(const PropositionId&) const = default;
};

// Horn-clause system: clauses are the attack units the defender funds.
class HornSystem {
 public:
  struct Clause {
    UnitId id;
    std::string name;
    std::vector<PropositionId> antecedents;
    PropositionId consequent;
    double surface;
  };

  static HornSystem Build(HornSpec spec);

  const HornSpec& spec() const { return spec_; }
  std::size_t num_clauses() const { return clauses_.size(); }
  std::span<const Clause> clauses() const { return clauses_; }
  const Clause& clause(UnitId id) const { return clauses_.at(id.value); }
  double surface(UnitId id) const { return clause(id).surface; }
  double reward(PropositionId p) const {
    return spec_.propositions.at(p.value).reward;
  }
  const std::string& proposition_name(PropositionId p) const {
    return spec_.propositions.at(p.value).id;
  }
  double budget() const { return spec_.budget; }

  std::optional<UnitId> FindClause(std::string_view name) const;
  std::optional<PropositionId> FindProposition(std::string_view name) const;

  // Clauses without antecedents; the Horn analogue of the start edges.
  std::vector<UnitId> axiom_clauses() const;

 private:
  HornSystem() = default;

  HornSpec spec_;
  std::vector<Clause> clauses_;
  std::map<std::string, UnitId, std::less<>> clause_index_;
  std::map<std::string, PropositionId, std::less<>> proposition_index_;
};

// An ordered list of clauses; valid when every antecedent is the consequent
// of some strictly earlier clause.
struct Proof {
  std::vector<UnitId> clauses;
  bool operator==(const Proof&) const = default;
};

// Throws InvalidAttack naming the first clause with an unproved antecedent.
void ValidateProof(const HornSystem& system, const Proof& proof);

// Sum of rewards over the distinct propositions the proof derives.
double HornPayoff(const HornSystem& system, const Proof& proof);
// Sum of d(c)/w(c) over clause occurrences.
double HornCost(const HornSystem& system, const Proof& proof,
                const DefenseAllocation& allocation);

// Encoding of an attack graph as Horn clauses: one proposition "reached(v)"
// per vertex, one axiom clause for the start vertex, and one clause
// reached(u) -> reached(v) per edge u->v with the edge's surface.
struct HornTranslation {
  HornSystem system;
  UnitId axiom;

  UnitId ClauseFor(UnitId edge) const { return UnitId{edge.value + 1}; }
  Proof TranslateAttack(const Attack& attack) const;
  DefenseAllocation TranslateAllocation(
      const DefenseAllocation& allocation) const;
};

HornTranslation TranslateToHorn(const System& system);

}  // namespace reactsec

#endif  // REACTSEC_HORN_H_
