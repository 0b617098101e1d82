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

#include "reactsec/attackers.h"

#include <algorithm>
#include <cmath>

namespace reactsec {
namespace {

// Relative tolerance under which two ROA values count as tied.
constexpr double kTieTolerance = 1e-12;

bool NearlyEqual(double a, double b) {
  return std::abs(a - b) <= kTieTolerance * std::max(std::abs(a), std::abs(b));
}

bool LexLess(const Attack& a, const Attack& b) {
  return std::lexicographical_compare(a.path.begin(), a.path.end(),
                                      b.path.begin(), b.path.end());
}

struct Candidate {
  const EnumeratedPath* path;
  double cost;
};

// True when `a` ranks strictly above `b` for the ROA objective.
bool RoaBetter(const Candidate& a, const Candidate& b) {
  const bool a_inf = a.path->payoff > 0.0 && a.cost == 0.0;
  const bool b_inf = b.path->payoff > 0.0 && b.cost == 0.0;
  if (a_inf != b_inf) return a_inf;
  if (a_inf) {
    if (a.path->payoff != b.path->payoff) return a.path->payoff > b.path->payoff;
    return LexLess(a.path->attack, b.path->attack);
  }
  const double ra = a.cost > 0.0 ? a.path->payoff / a.cost : 0.0;
  const double rb = b.cost > 0.0 ? b.path->payoff / b.cost : 0.0;
  if (!NearlyEqual(ra, rb)) return ra > rb;
  if (a.cost != b.cost) return a.cost < b.cost;
  return LexLess(a.path->attack, b.path->attack);
}

bool ProfitBetter(const Candidate& a, const Candidate& b) {
  const double pa = a.path->payoff - a.cost;
  const double pb = b.path->payoff - b.cost;
  if (pa != pb) return pa > pb;
  if (a.cost != b.cost) return a.cost < b.cost;
  return LexLess(a.path->attack, b.path->attack);
}

const std::vector<EnumeratedPath>& CachedPaths(
    const System& system, std::size_t limit, const std::vector<bool>& mask,
    const System*& cached_for, std::vector<EnumeratedPath>& paths) {
  if (cached_for != &system) {
    paths = EnumeratePaths(system, limit, mask);
    cached_for = &system;
  }
  return paths;
}

}  // namespace

BestResponseResult BestResponseAmong(std::span<const EnumeratedPath> paths,
                                     std::span<const double> charges,
                                     Objective objective) {
  if (paths.empty()) throw InvalidArgument("no attack paths to choose from");
  std::optional<Candidate> best;
  bool any_positive = false;
  for (const EnumeratedPath& p : paths) {
    const Candidate c{&p, PathCost(p.attack, charges)};
    any_positive = any_positive || p.payoff > 0.0;
    if (!best) {
      best = c;
      continue;
    }
    const bool better = objective == Objective::kRoa ? RoaBetter(c, *best)
                                                     : ProfitBetter(c, *best);
    if (better) best = c;
  }
  if (objective == Objective::kRoa && !any_positive) {
    // Every ROA is 0 or 0/0: fall back to the max-payoff (here: the first)
    // path and flag it.
    best = Candidate{&paths.front(), PathCost(paths.front().attack, charges)};
  }
  BestResponseResult out;
  out.attack = best->path->attack;
  out.payoff = best->path->payoff;
  out.cost = best->cost;
  out.roa = ExtendedReal::Ratio(out.payoff, out.cost);
  out.roa_undefined = objective == Objective::kRoa && !any_positive;
  return out;
}

BestResponseResult BestResponse(const System& system,
                                const DefenseAllocation& allocation,
                                Objective objective, std::size_t limit) {
  const std::vector<EnumeratedPath> paths = EnumeratePaths(system, limit);
  return BestResponseAmong(paths, EdgeCharges(system, allocation), objective);
}

Attack RandomParallelAttack(const System& system, Rng& rng) {
  if (system.num_edges() == 0) {
    throw InvalidArgument("random parallel attack needs at least one edge");
  }
  for (const System::Edge& e : system.edges()) {
    if (e.from != system.start() || e.to == system.start()) {
      throw InvalidArgument("random parallel attack needs a star system; edge '" +
                            e.name + "' does not leave the start vertex");
    }
  }
  std::uniform_int_distribution<std::size_t> pick(0, system.num_edges() - 1);
  return Attack{{UnitId{static_cast<std::uint32_t>(pick(rng))}}};
}

std::map<UnitId, double> AggregateMultiAttack(
    std::span<const Attack> attacks) {
  if (attacks.empty()) throw InvalidArgument("multi-attack round is empty");
  std::map<UnitId, double> counts;
  double total = 0.0;
  for (const Attack& a : attacks) {
    const std::set<UnitId> used(a.path.begin(), a.path.end());
    for (UnitId id : used) {
      counts[id] += 1.0;
      total += 1.0;
    }
  }
  if (total == 0.0) throw InvalidArgument("multi-attack round uses no edges");
  for (auto& [id, c] : counts) c /= total;
  return counts;
}

// ----------------------------------------------------------------------------

BestResponseAttacker::BestResponseAttacker(
    Objective objective, std::optional<std::set<UnitId>> visible,
    std::size_t limit)
    : objective_(objective), visible_(std::move(visible)), limit_(limit) {}

std::string BestResponseAttacker::Describe() const {
  std::string name = std::string(ObjectiveName(objective_)) + "-best-response";
  if (visible_) {
    name = "oblivious-subgraph(" + name + ";visible=";
    bool first = true;
    for (UnitId id : *visible_) {
      if (!first) name += ",";
      name += "#" + std::to_string(id.value);
      first = false;
    }
    name += ")";
  }
  return name;
}

const std::vector<EnumeratedPath>& BestResponseAttacker::PathsFor(
    const System& system) {
  std::vector<bool> mask;
  if (visible_) {
    mask.assign(system.num_edges(), false);
    for (UnitId id : *visible_) {
      if (id.value < mask.size()) mask[id.value] = true;
    }
  }
  return CachedPaths(system, limit_, mask, cached_for_, paths_);
}

std::vector<Attack> BestResponseAttacker::Choose(
    const System& system, const DefenseAllocation& allocation,
    std::size_t /*round*/, Rng& /*rng*/) {
  const std::vector<EnumeratedPath>& paths = PathsFor(system);
  if (paths.empty()) {
    throw InvalidArgument("attacker " + Describe() + " sees no attack path");
  }
  return {BestResponseAmong(paths, EdgeCharges(system, allocation), objective_)
              .attack};
}

std::vector<Attack> UniformRandomPathAttacker::Choose(
    const System& system, const DefenseAllocation& /*allocation*/,
    std::size_t /*round*/, Rng& rng) {
  const std::vector<EnumeratedPath>& paths =
      CachedPaths(system, limit_, {}, cached_for_, paths_);
  if (paths.empty()) throw InvalidArgument("system has no attack path");
  std::uniform_int_distribution<std::size_t> pick(0, paths.size() - 1);
  return {paths[pick(rng)].attack};
}

std::vector<Attack> RandomParallelAttacker::Choose(
    const System& system, const DefenseAllocation& /*allocation*/,
    std::size_t /*round*/, Rng& rng) {
  return {RandomParallelAttack(system, rng)};
}

FixedSequenceAttacker::FixedSequenceAttacker(
    std::vector<std::vector<Attack>> rounds)
    : rounds_(std::move(rounds)) {
  if (rounds_.empty()) throw InvalidArgument("fixed sequence is empty");
  for (const auto& r : rounds_) {
    if (r.empty()) throw InvalidArgument("fixed sequence has an empty round");
  }
}

FixedSequenceAttacker FixedSequenceAttacker::FromAttacks(
    std::vector<Attack> attacks) {
  std::vector<std::vector<Attack>> rounds;
  rounds.reserve(attacks.size());
  for (Attack& a : attacks) rounds.push_back({std::move(a)});
  return FixedSequenceAttacker(std::move(rounds));
}

std::vector<Attack> FixedSequenceAttacker::Choose(
    const System& system, const DefenseAllocation& /*allocation*/,
    std::size_t round, Rng& /*rng*/) {
  const std::vector<Attack>& attacks = rounds_[(round - 1) % rounds_.size()];
  for (const Attack& a : attacks) ValidateAttack(system, a);
  return attacks;
}

MultiAttacker::MultiAttacker(std::vector<std::unique_ptr<Attacker>> members)
    : members_(std::move(members)) {
  if (members_.empty()) throw InvalidArgument("multi attacker has no members");
}

std::string MultiAttacker::Describe() const {
  std::string name = "multi(";
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i > 0) name += ",";
    name += members_[i]->Describe();
  }
  return name + ")";
}

std::vector<Attack> MultiAttacker::Choose(const System& system,
                                          const DefenseAllocation& allocation,
                                          std::size_t round, Rng& rng) {
  std::vector<Attack> out;
  for (auto& member : members_) {
    std::vector<Attack> part = member->Choose(system, allocation, round, rng);
    out.insert(out.end(), std::make_move_iterator(part.begin()),
               std::make_move_iterator(part.end()));
  }
  return out;
}

}  // namespace reactsec
