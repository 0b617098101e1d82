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

#include "reactsec/defense.h"

#include <algorithm>
#include <cmath>
#include <deque>
#include <limits>
#include <numeric>
#include <set>
#include <string>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edmonds_karp_max_flow.hpp>

#include "reactsec/lp.h"

namespace reactsec {

const char* ObjectiveName(Objective objective) {
  return objective == Objective::kRoa ? "roa" : "profit";
}

Objective ParseObjective(std::string_view name) {
  if (name == "roa") return Objective::kRoa;
  if (name == "profit") return Objective::kProfit;
  throw InvalidArgument("unknown objective '" + std::string(name) +
                        "' (expected roa or profit)");
}

double BetaSchedule(std::size_t num_units, std::size_t round) {
  if (num_units == 0) throw InvalidArgument("beta schedule needs >= 1 unit");
  if (round == 0) throw InvalidArgument("beta schedule rounds start at 1");
  const double rate = std::sqrt(2.0 * std::log(static_cast<double>(num_units)) /
                                static_cast<double>(round + 1));
  return 1.0 / (1.0 + rate);
}

double BetaForHorizon(std::size_t num_units, std::size_t horizon) {
  if (num_units == 0) throw InvalidArgument("beta needs >= 1 unit");
  if (horizon == 0) throw InvalidArgument("horizon must be positive");
  const double rate = std::sqrt(2.0 * std::log(static_cast<double>(num_units)) /
                                static_cast<double>(horizon));
  return 1.0 / (1.0 + rate);
}

std::vector<double> NormalizedPowers(std::span<const double> cumulative,
                                     double beta) {
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw InvalidArgument("beta must lie in (0, 1]");
  }
  std::vector<double> out(cumulative.size());
  if (out.empty()) return out;
  const double log_beta = std::log(beta);
  // log_beta <= 0, so the smallest cumulative value carries the largest power.
  const double low = *std::min_element(cumulative.begin(), cumulative.end());
  double total = 0.0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = std::exp((cumulative[i] - low) * log_beta);
    total += out[i];
  }
  for (double& x : out) x /= total;
  return out;
}

// ----------------------------------------------------------------------------

ReactiveHiddenState::ReactiveHiddenState(double budget,
                                         std::optional<double> fixed_beta)
    : budget_(budget), fixed_beta_(fixed_beta) {
  if (!(budget > 0.0)) throw InvalidArgument("budget must be positive");
  if (fixed_beta && !(*fixed_beta > 0.0 && *fixed_beta <= 1.0)) {
    throw InvalidArgument("beta must lie in (0, 1]");
  }
}

void ReactiveHiddenState::Reveal(UnitId id, double surface) {
  if (!(surface > 0.0)) {
    throw InvalidArgument("revealed surface of unit #" +
                          std::to_string(id.value) + " must be positive");
  }
  auto it = index_.find(id);
  if (it != index_.end()) {
    if (surfaces_[it->second] != surface) {
      throw InvalidArgument("unit #" + std::to_string(id.value) +
                            " was re-revealed with a different surface");
    }
    return;
  }
  index_.emplace(id, revealed_.size());
  revealed_.push_back(id);
  surfaces_.push_back(surface);
  cumulative_.push_back(0.0);
}

DefenseAllocation ReactiveHiddenState::Step(
    std::span<const UnitId> attack, const std::map<UnitId, double>& surfaces) {
  if (attack.empty()) {
    throw InvalidArgument("reactive update needs a non-empty attack");
  }
  const std::set<UnitId> used(attack.begin(), attack.end());
  for (const auto& [id, w] : surfaces) {
    if (!used.contains(id)) {
      throw InvalidArgument("surface supplied for unit #" +
                            std::to_string(id.value) +
                            " which the attack did not use");
    }
  }
  for (UnitId id : attack) {
    auto it = surfaces.find(id);
    if (it == surfaces.end()) {
      throw InvalidArgument("missing surface for attacked unit #" +
                            std::to_string(id.value));
    }
    Reveal(id, it->second);
  }
  ++round_;
  for (UnitId id : used) {
    const std::size_t i = index_.at(id);
    cumulative_[i] += -1.0 / surfaces_[i];
  }
  return Finish();
}

DefenseAllocation ReactiveHiddenState::StepWeighted(
    const std::map<UnitId, double>& mass,
    const std::map<UnitId, double>& surfaces) {
  bool any = false;
  for (const auto& [id, m] : mass) {
    if (!(m >= 0.0)) throw InvalidArgument("attack mass must be nonnegative");
    if (m == 0.0) continue;
    auto it = surfaces.find(id);
    if (it == surfaces.end()) {
      throw InvalidArgument("missing surface for attacked unit #" +
                            std::to_string(id.value));
    }
    Reveal(id, it->second);
    any = true;
  }
  if (!any) throw InvalidArgument("reactive update needs a non-empty attack");
  ++round_;
  for (const auto& [id, m] : mass) {
    if (m == 0.0) continue;
    const std::size_t i = index_.at(id);
    cumulative_[i] += -m / surfaces_[i];
  }
  return Finish();
}

DefenseAllocation ReactiveHiddenState::Finish() {
  beta_ = fixed_beta_ ? *fixed_beta_ : BetaSchedule(revealed_.size(), round_);
  return allocation();
}

std::vector<double> ReactiveHiddenState::probabilities() const {
  if (!beta_) return std::vector<double>(revealed_.size(), 0.0);
  return NormalizedPowers(cumulative_, *beta_);
}

DefenseAllocation ReactiveHiddenState::allocation() const {
  std::map<UnitId, double> amounts;
  if (beta_) {
    const std::vector<double> p = probabilities();
    for (std::size_t i = 0; i < revealed_.size(); ++i) {
      amounts.emplace(revealed_[i], budget_ * p[i]);
    }
  }
  return DefenseAllocation(budget_, std::move(amounts));
}

double ReactiveHiddenState::cumulative_loss(UnitId id) const {
  auto it = index_.find(id);
  return it == index_.end() ? 0.0 : cumulative_[it->second];
}

double ReactiveHiddenState::surface(UnitId id) const {
  return surfaces_.at(index_.at(id));
}

// ----------------------------------------------------------------------------

ReactiveKnownState::ReactiveKnownState(std::vector<UnitId> units,
                                       std::vector<double> surfaces,
                                       double budget, double beta)
    : units_(std::move(units)),
      surfaces_(std::move(surfaces)),
      budget_(budget),
      beta_(beta) {
  if (units_.empty()) throw InvalidArgument("known-edge defender needs units");
  if (units_.size() != surfaces_.size()) {
    throw InvalidArgument("one surface per unit is required");
  }
  if (!(beta > 0.0 && beta <= 1.0)) {
    throw InvalidArgument("beta must lie in (0, 1]");
  }
  for (std::size_t i = 0; i < units_.size(); ++i) {
    if (!(surfaces_[i] > 0.0)) throw InvalidArgument("surfaces must be > 0");
    if (!index_.emplace(units_[i], i).second) {
      throw InvalidArgument("duplicate unit in known-edge defender");
    }
  }
  log_p_.assign(units_.size(), -std::log(static_cast<double>(units_.size())));
}

ReactiveKnownState ReactiveKnownState::WithHorizon(std::vector<UnitId> units,
                                                   std::vector<double> surfaces,
                                                   double budget,
                                                   std::size_t horizon) {
  const double beta = BetaForHorizon(units.size(), horizon);
  return ReactiveKnownState(std::move(units), std::move(surfaces), budget,
                            beta);
}

void ReactiveKnownState::Step(std::span<const UnitId> attack) {
  std::vector<double> losses(units_.size(), 0.0);
  for (UnitId id : attack) {
    auto it = index_.find(id);
    if (it == index_.end()) {
      throw InvalidArgument("attack uses unit #" + std::to_string(id.value) +
                            " unknown to the defender");
    }
    losses[it->second] = -1.0 / surfaces_[it->second];
  }
  StepLosses(losses);
}

void ReactiveKnownState::StepLosses(std::span<const double> losses) {
  if (losses.size() != units_.size()) {
    throw InvalidArgument("loss column must have one entry per unit");
  }
  const double log_beta = std::log(beta_);
  double top = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < log_p_.size(); ++i) {
    log_p_[i] += losses[i] * log_beta;
    top = std::max(top, log_p_[i]);
  }
  double z = 0.0;
  for (double lp : log_p_) z += std::exp(lp - top);
  const double log_z = top + std::log(z);
  for (double& lp : log_p_) lp -= log_z;
  ++round_;
}

std::vector<double> ReactiveKnownState::probabilities() const {
  std::vector<double> p(log_p_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = std::exp(log_p_[i]);
  return p;
}

DefenseAllocation ReactiveKnownState::allocation() const {
  std::map<UnitId, double> amounts;
  const std::vector<double> p = probabilities();
  double total = std::accumulate(p.begin(), p.end(), 0.0);
  for (std::size_t i = 0; i < units_.size(); ++i) {
    amounts.emplace(units_[i], budget_ * p[i] / total);
  }
  return DefenseAllocation(budget_, std::move(amounts));
}

// ----------------------------------------------------------------------------

namespace {

using FlowTraits = boost::adjacency_list_traits<boost::vecS, boost::vecS,
                                                boost::directedS>;
using FlowGraph = boost::adjacency_list<
    boost::vecS, boost::vecS, boost::directedS, boost::no_property,
    boost::property<
        boost::edge_capacity_t, double,
        boost::property<boost::edge_residual_capacity_t, double,
                        boost::property<boost::edge_reverse_t,
                                        FlowTraits::edge_descriptor>>>>;

std::vector<bool> Reachable(const System& system, VertexId from) {
  std::vector<bool> seen(system.num_vertices(), false);
  std::deque<VertexId> queue{from};
  seen[from.value] = true;
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (UnitId id : system.out_edges(v)) {
      const VertexId next = system.edge(id).to;
      if (!seen[next.value]) {
        seen[next.value] = true;
        queue.push_back(next);
      }
    }
  }
  return seen;
}

DefenseAllocation ClampToBudget(std::map<UnitId, double> amounts,
                                double budget) {
  double total = 0.0;
  for (auto& [id, x] : amounts) {
    x = std::max(x, 0.0);
    total += x;
  }
  if (total > budget) {
    for (auto& [id, x] : amounts) x *= budget / total;
  }
  return DefenseAllocation(budget, std::move(amounts));
}

}  // namespace

PerimeterDefense MinCutPerimeterDefense(const System& system,
                                        VertexId target) {
  if (target.value >= system.num_vertices()) {
    throw InvalidArgument("unknown target vertex");
  }
  if (target == system.start()) {
    throw InvalidArgument("target must differ from the start vertex");
  }
  if (!Reachable(system, system.start())[target.value]) {
    throw InvalidArgument("target '" + system.vertex_name(target) +
                          "' is unreachable from the start vertex");
  }

  FlowGraph graph(system.num_vertices());
  auto capacity = boost::get(boost::edge_capacity, graph);
  auto residual = boost::get(boost::edge_residual_capacity, graph);
  auto reverse = boost::get(boost::edge_reverse, graph);
  double total_capacity = 0.0;
  for (const System::Edge& e : system.edges()) {
    if (e.from == e.to) continue;
    auto forward = boost::add_edge(e.from.value, e.to.value, graph).first;
    auto backward = boost::add_edge(e.to.value, e.from.value, graph).first;
    capacity[forward] = e.surface;
    capacity[backward] = 0.0;
    reverse[forward] = backward;
    reverse[backward] = forward;
    total_capacity += e.surface;
  }
  boost::edmonds_karp_max_flow(graph, system.start().value, target.value);

  // Source side of the cut: vertices reachable through unsaturated edges.
  const double eps = 1e-12 * total_capacity;
  std::vector<bool> source_side(system.num_vertices(), false);
  std::deque<std::size_t> queue{system.start().value};
  source_side[system.start().value] = true;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    for (auto [it, end] = boost::out_edges(v, graph); it != end; ++it) {
      const std::size_t next = boost::target(*it, graph);
      if (!source_side[next] && residual[*it] > eps) {
        source_side[next] = true;
        queue.push_back(next);
      }
    }
  }

  PerimeterDefense out{DefenseAllocation(system.budget()), {}, 0.0};
  for (const System::Edge& e : system.edges()) {
    if (source_side[e.from.value] && !source_side[e.to.value]) {
      out.cut.push_back(e.id);
      out.cut_weight += e.surface;
    }
  }
  std::map<UnitId, double> amounts;
  for (UnitId id : out.cut) {
    amounts.emplace(id, system.budget() * system.surface(id) / out.cut_weight);
  }
  out.allocation = ClampToBudget(std::move(amounts), system.budget());
  return out;
}

// ----------------------------------------------------------------------------

namespace {

ExtendedReal WorstCase(const System& system,
                       const std::vector<EnumeratedPath>& paths,
                       const DefenseAllocation& allocation,
                       Objective objective) {
  const std::vector<double> charges = EdgeCharges(system, allocation);
  if (objective == Objective::kProfit) {
    double best = -std::numeric_limits<double>::infinity();
    for (const EnumeratedPath& p : paths) {
      best = std::max(best, p.payoff - PathCost(p.attack, charges));
    }
    return ExtendedReal::Finite(best);
  }
  double best = 0.0;
  for (const EnumeratedPath& p : paths) {
    if (p.payoff <= 0.0) continue;
    const double cost = PathCost(p.attack, charges);
    if (cost == 0.0) return ExtendedReal::Infinite();
    best = std::max(best, p.payoff / cost);
  }
  return ExtendedReal::Finite(best);
}

}  // namespace

MinimaxDefense MinimaxProactiveDefense(const System& system,
                                       Objective objective,
                                       std::size_t limit) {
  const std::vector<EnumeratedPath> paths = EnumeratePaths(system, limit);
  if (paths.empty()) {
    throw InvalidArgument("the start vertex has no outgoing edges");
  }
  const std::size_t n = system.num_edges();
  const double budget = system.budget();
  lp::Problem problem;

  if (objective == Objective::kRoa) {
    // Variables: d(0..n-1), z.
    for (const EnumeratedPath& p : paths) {
      if (p.payoff <= 0.0) continue;
      std::vector<double> row(n + 1, 0.0);
      for (UnitId id : p.attack.path) row[id.value] -= 1.0 / system.surface(id);
      row[n] = p.payoff;
      problem.a.push_back(std::move(row));
      problem.b.push_back(0.0);
    }
    if (problem.a.empty()) {
      DefenseAllocation uniform = UniformDefense(system);
      return {uniform, ExtendedReal::Finite(0.0), paths.size()};
    }
    std::vector<double> budget_row(n + 1, 1.0);
    budget_row[n] = 0.0;
    problem.a.push_back(std::move(budget_row));
    problem.b.push_back(budget);
    problem.c.assign(n + 1, 0.0);
    problem.c[n] = 1.0;
  } else {
    // Variables: d(0..n-1), u+, u-; profit bound u = u+ - u-.
    for (const EnumeratedPath& p : paths) {
      std::vector<double> row(n + 2, 0.0);
      for (UnitId id : p.attack.path) row[id.value] -= 1.0 / system.surface(id);
      row[n] = -1.0;
      row[n + 1] = 1.0;
      problem.a.push_back(std::move(row));
      problem.b.push_back(-p.payoff);
    }
    std::vector<double> budget_row(n + 2, 1.0);
    budget_row[n] = 0.0;
    budget_row[n + 1] = 0.0;
    problem.a.push_back(std::move(budget_row));
    problem.b.push_back(budget);
    problem.c.assign(n + 2, 0.0);
    problem.c[n] = -1.0;
    problem.c[n + 1] = 1.0;
  }

  const lp::Solution solution = lp::Maximize(problem);
  if (solution.status != lp::Status::kOptimal) {
    throw Error("E-LP", "minimax program was not solved to optimality");
  }
  std::map<UnitId, double> amounts;
  for (std::size_t i = 0; i < n; ++i) {
    if (solution.x[i] > 0.0) {
      amounts.emplace(UnitId{static_cast<std::uint32_t>(i)}, solution.x[i]);
    }
  }
  DefenseAllocation allocation = ClampToBudget(std::move(amounts), budget);
  ExtendedReal value = WorstCase(system, paths, allocation, objective);
  return {std::move(allocation), value, paths.size()};
}

// ----------------------------------------------------------------------------

HindsightDefense HindsightFromCounts(std::span<const double> counts,
                                     std::span<const double> surfaces,
                                     double budget) {
  if (counts.size() != surfaces.size()) {
    throw InvalidArgument("one surface per unit is required");
  }
  std::optional<std::size_t> best;
  double best_score = 0.0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    const double score = counts[i] / surfaces[i];
    if (score > best_score) {
      best = i;
      best_score = score;
    }
  }
  if (!best) {
    throw InvalidArgument("hindsight defense needs at least one attacked unit");
  }
  const UnitId unit{static_cast<std::uint32_t>(*best)};
  return {DefenseAllocation(budget, {{unit, budget}}), budget * best_score,
          unit};
}

HindsightDefense HindsightBestProactive(const System& system,
                                        std::span<const Attack> attacks) {
  if (attacks.empty()) {
    throw InvalidArgument("hindsight defense needs a non-empty sequence");
  }
  std::vector<double> counts(system.num_edges(), 0.0);
  std::vector<double> surfaces(system.num_edges());
  for (const System::Edge& e : system.edges()) surfaces[e.id.value] = e.surface;
  for (const Attack& a : attacks) {
    ValidateAttack(system, a);
    for (UnitId id : a.path) counts[id.value] += 1.0;
  }
  HindsightDefense out =
      HindsightFromCounts(counts, surfaces, system.budget());
  out.cumulative_cost = 0.0;
  for (const Attack& a : attacks) {
    out.cumulative_cost += Cost(system, a, out.allocation);
  }
  return out;
}

DefenseAllocation UniformDefense(const System& system) {
  if (system.num_edges() == 0) {
    throw InvalidArgument("uniform defense needs at least one edge");
  }
  const double share =
      system.budget() / static_cast<double>(system.num_edges());
  std::map<UnitId, double> amounts;
  for (const System::Edge& e : system.edges()) amounts.emplace(e.id, share);
  return DefenseAllocation(system.budget(), std::move(amounts));
}

DefenseAllocation MyopicDefense(std::span<const UnitId> last_attack,
                                const std::map<UnitId, double>& surfaces,
                                double budget) {
  if (last_attack.empty()) {
    throw InvalidArgument("myopic defense needs a non-empty last attack");
  }
  const std::set<UnitId> used(last_attack.begin(), last_attack.end());
  double total = 0.0;
  for (UnitId id : used) total += surfaces.at(id);
  std::map<UnitId, double> amounts;
  for (UnitId id : used) {
    amounts.emplace(id, budget * surfaces.at(id) / total);
  }
  return DefenseAllocation(budget, std::move(amounts));
}

DefenseAllocation MyopicDefense(const System& system, const Attack& last) {
  ValidateAttack(system, last);
  std::map<UnitId, double> surfaces;
  for (UnitId id : last.path) surfaces.emplace(id, system.surface(id));
  return MyopicDefense(last.path, surfaces, system.budget());
}

}  // namespace reactsec
