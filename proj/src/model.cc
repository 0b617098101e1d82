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

#include "reactsec/model.h"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace reactsec {

std::string FormatViolations(const std::vector<Violation>& violations) {
  std::ostringstream out;
  for (std::size_t i = 0; i < violations.size(); ++i) {
    const Violation& v = violations[i];
    if (i > 0) out << "\n";
    out << v.code << ": " << v.message;
    if (!v.where.empty()) out << " (" << v.where << ")";
  }
  return out.str();
}

ValidationError::ValidationError(std::vector<Violation> violations)
    : Error(violations.empty() ? "E-VALIDATION" : violations.front().code,
            FormatViolations(violations)),
      violations_(std::move(violations)) {}

ExtendedReal ExtendedReal::Ratio(double numerator, double denominator) {
  if (denominator == 0.0) {
    return numerator == 0.0 ? Undefined() : Infinite();
  }
  return Finite(numerator / denominator);
}

std::string ExtendedReal::ToString() const {
  switch (kind_) {
    case Kind::kInfinite:
      return "inf";
    case Kind::kUndefined:
      return "undefined";
    case Kind::kFinite:
      break;
  }
  std::ostringstream out;
  out.precision(17);
  out << value_;
  return out.str();
}

std::vector<Violation> ValidateSystem(const SystemSpec& spec) {
  std::vector<Violation> out;
  std::map<std::string, std::size_t> vertex_index;
  for (std::size_t i = 0; i < spec.vertices.size(); ++i) {
    const VertexSpec& v = spec.vertices[i];
    const std::string where = "vertices[" + std::to_string(i) + "]";
    if (v.id.empty()) {
      out.push_back({"E-ID", "vertex id must be non-empty", where});
    }
    if (!vertex_index.emplace(v.id, i).second) {
      out.push_back({"E-DUP-VERTEX", "duplicate vertex id '" + v.id + "'",
                     where});
    }
    if (!std::isfinite(v.reward) || v.reward < 0.0) {
      out.push_back({"E-REWARD",
                     "reward of vertex '" + v.id + "' must be nonnegative",
                     where});
    }
  }
  auto start = vertex_index.find(spec.start);
  if (start == vertex_index.end()) {
    out.push_back({"E-START", "start vertex '" + spec.start +
                                  "' is not a declared vertex",
                   "start"});
  } else if (spec.vertices[start->second].reward != 0.0) {
    out.push_back({"E-START-REWARD", "start vertex must have zero reward",
                   "vertices[" + std::to_string(start->second) + "]"});
  }
  std::set<std::string> edge_ids;
  for (std::size_t i = 0; i < spec.edges.size(); ++i) {
    const EdgeSpec& e = spec.edges[i];
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (e.id.empty()) {
      out.push_back({"E-ID", "edge id must be non-empty", where});
    }
    if (!edge_ids.insert(e.id).second) {
      out.push_back({"E-DUP-EDGE", "duplicate edge id '" + e.id + "'", where});
    }
    for (const std::string* endpoint : {&e.from, &e.to}) {
      if (!vertex_index.contains(*endpoint)) {
        out.push_back({"E-ENDPOINT",
                       "edge '" + e.id + "' references undeclared vertex '" +
                           *endpoint + "'",
                       where});
      }
    }
    if (!std::isfinite(e.surface) || e.surface <= 0.0) {
      out.push_back({"E-SURFACE",
                     "attack surface of edge '" + e.id +
                         "' must be strictly positive",
                     where});
    }
  }
  if (!std::isfinite(spec.budget) || spec.budget <= 0.0) {
    out.push_back({"E-BUDGET", "budget must be strictly positive", "budget"});
  }
  return out;
}

System System::Build(SystemSpec spec) {
  std::vector<Violation> violations = ValidateSystem(spec);
  if (!violations.empty()) throw ValidationError(std::move(violations));

  System system;
  for (std::size_t i = 0; i < spec.vertices.size(); ++i) {
    system.vertex_index_.emplace(spec.vertices[i].id,
                                 VertexId{static_cast<std::uint32_t>(i)});
  }
  system.out_edges_.resize(spec.vertices.size());
  for (std::size_t i = 0; i < spec.edges.size(); ++i) {
    const EdgeSpec& e = spec.edges[i];
    const UnitId id{static_cast<std::uint32_t>(i)};
    const VertexId from = system.vertex_index_.at(e.from);
    system.edges_.push_back(
        {id, e.id, from, system.vertex_index_.at(e.to), e.surface});
    system.edge_index_.emplace(e.id, id);
    system.out_edges_[from.value].push_back(id);
  }
  system.start_ = system.vertex_index_.at(spec.start);
  system.spec_ = std::move(spec);
  return system;
}

std::optional<UnitId> System::FindEdge(std::string_view name) const {
  auto it = edge_index_.find(name);
  if (it == edge_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<VertexId> System::FindVertex(std::string_view name) const {
  auto it = vertex_index_.find(name);
  if (it == vertex_index_.end()) return std::nullopt;
  return it->second;
}

void ValidateAttack(const System& system, const Attack& attack) {
  VertexId at = system.start();
  std::set<UnitId> used;
  for (std::size_t i = 0; i < attack.path.size(); ++i) {
    const UnitId id = attack.path[i];
    if (id.value >= system.num_edges()) {
      throw InvalidAttack("attack step " + std::to_string(i) +
                          " references unknown edge #" +
                          std::to_string(id.value));
    }
    const System::Edge& e = system.edge(id);
    if (e.from != at) {
      throw InvalidAttack("edge '" + e.name + "' at step " +
                          std::to_string(i) + " does not start at vertex '" +
                          system.vertex_name(at) + "'");
    }
    if (!used.insert(id).second) {
      throw InvalidAttack("edge '" + e.name + "' is repeated at step " +
                          std::to_string(i));
    }
    at = e.to;
  }
}

std::vector<VertexId> VisitedVertices(const System& system,
                                      const Attack& attack) {
  std::vector<VertexId> visited;
  if (attack.empty()) return visited;
  visited.push_back(system.start());
  for (UnitId id : attack.path) visited.push_back(system.edge(id).to);
  std::sort(visited.begin(), visited.end());
  visited.erase(std::unique(visited.begin(), visited.end()), visited.end());
  return visited;
}

std::string AttackToString(const System& system, const Attack& attack) {
  std::string out;
  for (std::size_t i = 0; i < attack.path.size(); ++i) {
    if (i > 0) out += ";";
    out += system.edge(attack.path[i]).name;
  }
  return out;
}

DefenseAllocation::DefenseAllocation(double budget) : budget_(budget) {}

DefenseAllocation::DefenseAllocation(double budget,
                                     std::map<UnitId, double> amounts)
    : budget_(budget), amounts_(std::move(amounts)) {
  double total = 0.0;
  for (const auto& [id, amount] : amounts_) {
    if (!std::isfinite(amount) || amount < 0.0) {
      throw InfeasibleAllocation("allocation on unit #" +
                                 std::to_string(id.value) +
                                 " must be nonnegative");
    }
    total += amount;
  }
  if (total > budget_ + kBudgetTolerance * budget_) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "allocation total " << total << " exceeds budget " << budget_;
    throw InfeasibleAllocation(msg.str());
  }
}

double DefenseAllocation::at(UnitId id) const {
  auto it = amounts_.find(id);
  return it == amounts_.end() ? 0.0 : it->second;
}

double DefenseAllocation::total() const {
  double total = 0.0;
  for (const auto& [id, amount] : amounts_) total += amount;
  return total;
}

bool DefenseAllocation::is_zero() const {
  return std::all_of(amounts_.begin(), amounts_.end(),
                     [](const auto& kv) { return kv.second == 0.0; });
}

double Payoff(const System& system, const Attack& attack) {
  ValidateAttack(system, attack);
  double payoff = 0.0;
  for (VertexId v : VisitedVertices(system, attack)) {
    payoff += system.reward(v);
  }
  return payoff;
}

double Cost(const System& system, const Attack& attack,
            const DefenseAllocation& allocation) {
  ValidateAttack(system, attack);
  double cost = 0.0;
  for (UnitId id : attack.path) {
    cost += allocation.at(id) / system.surface(id);
  }
  return cost;
}

double Profit(const System& system, const Attack& attack,
              const DefenseAllocation& allocation) {
  return Payoff(system, attack) - Cost(system, attack, allocation);
}

ExtendedReal Roa(const System& system, const Attack& attack,
                 const DefenseAllocation& allocation) {
  if (attack.empty()) {
    throw InvalidArgument("return on attack is undefined for the empty attack");
  }
  return ExtendedReal::Ratio(Payoff(system, attack),
                             Cost(system, attack, allocation));
}

ExtendedReal CumulativeRoa(std::span<const double> payoffs,
                           std::span<const double> costs) {
  if (payoffs.empty() || costs.empty()) {
    throw InvalidArgument("cumulative ROA needs at least one round");
  }
  if (payoffs.size() != costs.size()) {
    throw InvalidArgument("payoff and cost series differ in length");
  }
  double total_payoff = 0.0;
  double total_cost = 0.0;
  for (std::size_t i = 0; i < payoffs.size(); ++i) {
    if (payoffs[i] < 0.0 || costs[i] < 0.0) {
      throw InvalidArgument("payoffs and costs must be nonnegative");
    }
    total_payoff += payoffs[i];
    total_cost += costs[i];
  }
  return ExtendedReal::Ratio(total_payoff, total_cost);
}

std::vector<double> EdgeCharges(const System& system,
                                const DefenseAllocation& allocation) {
  std::vector<double> charges(system.num_edges(), 0.0);
  for (const auto& [id, amount] : allocation.amounts()) {
    if (id.value < charges.size()) {
      charges[id.value] = amount / system.surface(id);
    }
  }
  return charges;
}

}  // namespace reactsec
