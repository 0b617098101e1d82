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

#include "reactsec/horn.h"

#include <cmath>
#include <set>

namespace reactsec {

std::vector<Violation> ValidateHorn(const HornSpec& spec) {
  std::vector<Violation> out;
  std::set<std::string> props;
  for (std::size_t i = 0; i < spec.propositions.size(); ++i) {
    const PropositionSpec& p = spec.propositions[i];
    const std::string where = "propositions[" + std::to_string(i) + "]";
    if (p.id.empty()) {
      out.push_back({"E-ID", "proposition id must be non-empty", where});
    }
    if (!props.insert(p.id).second) {
      out.push_back({"E-DUP-PROPOSITION",
                     "duplicate proposition id '" + p.id + "'", where});
    }
    if (!std::isfinite(p.reward) || p.reward < 0.0) {
      out.push_back({"E-REWARD",
                     "reward of proposition '" + p.id +
                         "' must be nonnegative",
                     where});
    }
  }
  std::set<std::string> clause_ids;
  for (std::size_t i = 0; i < spec.clauses.size(); ++i) {
    const ClauseSpec& c = spec.clauses[i];
    const std::string where = "clauses[" + std::to_string(i) + "]";
    if (c.id.empty()) {
      out.push_back({"E-ID", "clause id must be non-empty", where});
    }
    if (!clause_ids.insert(c.id).second) {
      out.push_back({"E-DUP-CLAUSE", "duplicate clause id '" + c.id + "'",
                     where});
    }
    for (const std::string& a : c.antecedents) {
      if (!props.contains(a)) {
        out.push_back({"E-PROPOSITION",
                       "clause '" + c.id +
                           "' references undeclared proposition '" + a + "'",
                       where});
      }
    }
    if (!props.contains(c.consequent)) {
      out.push_back({"E-PROPOSITION",
                     "clause '" + c.id +
                         "' concludes undeclared proposition '" +
                         c.consequent + "'",
                     where});
    }
    if (!std::isfinite(c.surface) || c.surface <= 0.0) {
      out.push_back({"E-SURFACE",
                     "attack surface of clause '" + c.id +
                         "' must be strictly positive",
                     where});
    }
  }
  if (!std::isfinite(spec.budget) || spec.budget <= 0.0) {
    out.push_back({"E-BUDGET", "budget must be strictly positive", "budget"});
  }
  return out;
}

HornSystem HornSystem::Build(HornSpec spec) {
  std::vector<Violation> violations = ValidateHorn(spec);
  if (!violations.empty()) throw ValidationError(std::move(violations));

  HornSystem system;
  for (std::size_t i = 0; i < spec.propositions.size(); ++i) {
    system.proposition_index_.emplace(
        spec.propositions[i].id, PropositionId{static_cast<std::uint32_t>(i)});
  }
  for (std::size_t i = 0; i < spec.clauses.size(); ++i) {
    const ClauseSpec& c = spec.clauses[i];
    Clause clause{UnitId{static_cast<std::uint32_t>(i)}, c.id, {},
                  system.proposition_index_.at(c.consequent), c.surface};
    for (const std::string& a : c.antecedents) {
      clause.antecedents.push_back(system.proposition_index_.at(a));
    }
    system.clause_index_.emplace(c.id, clause.id);
    system.clauses_.push_back(std::move(clause));
  }
  system.spec_ = std::move(spec);
  return system;
}

std::optional<UnitId> HornSystem::FindClause(std::string_view name) const {
  auto it = clause_index_.find(name);
  if (it == clause_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<PropositionId> HornSystem::FindProposition(
    std::string_view name) const {
  auto it = proposition_index_.find(name);
  if (it == proposition_index_.end()) return std::nullopt;
  return it->second;
}

std::vector<UnitId> HornSystem::axiom_clauses() const {
  std::vector<UnitId> out;
  for (const Clause& c : clauses_) {
    if (c.antecedents.empty()) out.push_back(c.id);
  }
  return out;
}

void ValidateProof(const HornSystem& system, const Proof& proof) {
  std::set<PropositionId> proved;
  for (std::size_t i = 0; i < proof.clauses.size(); ++i) {
    const UnitId id = proof.clauses[i];
    if (id.value >= system.num_clauses()) {
      throw InvalidAttack("proof step " + std::to_string(i) +
                          " references unknown clause #" +
                          std::to_string(id.value));
    }
    const HornSystem::Clause& c = system.clause(id);
    for (PropositionId a : c.antecedents) {
      if (!proved.contains(a)) {
        throw InvalidAttack("clause '" + c.name + "' at step " +
                            std::to_string(i) + " uses unproved antecedent '" +
                            system.proposition_name(a) + "'");
      }
    }
    proved.insert(c.consequent);
  }
}

double HornPayoff(const HornSystem& system, const Proof& proof) {
  ValidateProof(system, proof);
  std::set<PropositionId> proved;
  for (UnitId id : proof.clauses) proved.insert(system.clause(id).consequent);
  double payoff = 0.0;
  for (PropositionId p : proved) payoff += system.reward(p);
  return payoff;
}

double HornCost(const HornSystem& system, const Proof& proof,
                const DefenseAllocation& allocation) {
  ValidateProof(system, proof);
  double cost = 0.0;
  for (UnitId id : proof.clauses) {
    cost += allocation.at(id) / system.surface(id);
  }
  return cost;
}

Proof HornTranslation::TranslateAttack(const Attack& attack) const {
  Proof proof;
  if (attack.empty()) return proof;
  proof.clauses.push_back(axiom);
  for (UnitId e : attack.path) proof.clauses.push_back(ClauseFor(e));
  return proof;
}

DefenseAllocation HornTranslation::TranslateAllocation(
    const DefenseAllocation& allocation) const {
  std::map<UnitId, double> amounts;
  for (const auto& [id, amount] : allocation.amounts()) {
    amounts.emplace(ClauseFor(id), amount);
  }
  return DefenseAllocation(allocation.budget(), std::move(amounts));
}

HornTranslation TranslateToHorn(const System& system) {
  HornSpec spec;
  spec.budget = system.budget();
  for (const VertexSpec& v : system.spec().vertices) {
    spec.propositions.push_back({"reached(" + v.id + ")", v.reward});
  }
  const std::string& start = system.vertex_name(system.start());
  spec.clauses.push_back({"axiom(" + start + ")", {}, "reached(" + start + ")",
                          1.0});
  for (const System::Edge& e : system.edges()) {
    spec.clauses.push_back({e.name,
                            {"reached(" + system.vertex_name(e.from) + ")"},
                            "reached(" + system.vertex_name(e.to) + ")",
                            e.surface});
  }
  return HornTranslation{HornSystem::Build(std::move(spec)), UnitId{0}};
}

}  // namespace reactsec
