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

#ifndef REACTSEC_MODEL_H_
#define REACTSEC_MODEL_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reactsec/errors.h"

namespace reactsec {

// Identifies an attack unit: an edge of an attack graph or a clause of a Horn
// system. The value is the unit's declaration index, which also fixes the
// tie-breaking order used throughout the library.
struct UnitId {
  std::uint32_t value = 0;
  auto operator<=>(const UnitId&) const = default;
};

struct VertexId {
  std::uint32_t value = 0;
  auto operator<=>(const VertexId&) const = default;
};

// Relative slack allowed on the budget constraint sum(d) <= B.
inline constexpr double kBudgetTolerance = 1e-9;

// A real number extended with +infinity and an "undefined" marker, used for
// return-on-attack values (x/0 with x > 0 is infinite, 0/0 is undefined).
class ExtendedReal {
 public:
  enum class Kind { kFinite, kInfinite, kUndefined };

  static ExtendedReal Finite(double v) { return ExtendedReal(Kind::kFinite, v); }
  static ExtendedReal Infinite() { return ExtendedReal(Kind::kInfinite, 0.0); }
  static ExtendedReal Undefined() {
    return ExtendedReal(Kind::kUndefined, 0.0);
  }
  // numerator / denominator for nonnegative operands.
  static ExtendedReal Ratio(double numerator, double denominator);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::kFinite; }
  bool is_infinite() const { return kind_ == Kind::kInfinite; }
  bool is_undefined() const { return kind_ == Kind::kUndefined; }
  // Only meaningful when is_finite().
  double value() const { return value_; }

  std::string ToString() const;

  bool operator==(const ExtendedReal&) const = default;

 private:
  ExtendedReal(Kind kind, double value) : kind_(kind), value_(value) {}

  Kind kind_;
  double value_;
};

// ----------------------------------------------------------------------------
// Attack graphs.

struct VertexSpec {
  std::string id;
  double reward = 0.0;
  bool operator==(const VertexSpec&) const = default;
};

struct EdgeSpec {
  std::string id;
  std::string from;
  std::string to;
  double surface = 1.0;
  bool operator==(const EdgeSpec&) const = default;
};

// Plain description of an attack graph, as read from a file or built by hand.
// Nothing is checked until it is turned into a System.
struct SystemSpec {
  std::vector<VertexSpec> vertices;
  std::vector<EdgeSpec> edges;
  std::string start;
  double budget = 1.0;
  bool operator==(const SystemSpec&) const = default;
};

// Returns every broken invariant of `spec`; an empty result means the spec
// describes a valid system.
std::vector<Violation> ValidateSystem(const SystemSpec& spec);

// An immutable, validated attack graph with a defense budget.
class System {
 public:
  struct Edge {
    UnitId id;
    std::string name;
    VertexId from;
    VertexId to;
    double surface;
  };

  // Throws ValidationError listing all violations.
  static System Build(SystemSpec spec);

  const SystemSpec& spec() const { return spec_; }

  std::size_t num_vertices() const { return spec_.vertices.size(); }
  std::size_t num_edges() const { return edges_.size(); }

  std::span<const Edge> edges() const { return edges_; }
  const Edge& edge(UnitId id) const { return edges_.at(id.value); }
  double surface(UnitId id) const { return edge(id).surface; }

  std::optional<UnitId> FindEdge(std::string_view name) const;
  std::optional<VertexId> FindVertex(std::string_view name) const;

  double reward(VertexId v) const { return spec_.vertices.at(v.value).reward; }
  const std::string& vertex_name(VertexId v) const {
    return spec_.vertices.at(v.value).id;
  }

  VertexId start() const { return start_; }
  double budget() const { return spec_.budget; }

  // Outgoing edges of `v` in declaration order.
  std::span<const UnitId> out_edges(VertexId v) const {
    return out_edges_.at(v.value);
  }
  // Edges leaving the start vertex.
  std::span<const UnitId> start_edges() const { return out_edges(start_); }

 private:
  System() = default;

  SystemSpec spec_;
  std::vector<Edge> edges_;
  std::vector<std::vector<UnitId>> out_edges_;
  std::map<std::string, UnitId, std::less<>> edge_index_;
  std::map<std::string, VertexId, std::less<>> vertex_index_;
  VertexId start_;
};

// An s-rooted, edge-simple path. The empty path is the trivial attack.
struct Attack {
  std::vector<UnitId> path;

  bool empty() const { return path.empty(); }
  bool operator==(const Attack&) const = default;
};

// Throws InvalidAttack naming the first edge that breaks the path.
void ValidateAttack(const System& system, const Attack& attack);

// Distinct vertices on the path, including the start vertex when the path is
// non-empty. Sorted by vertex id.
std::vector<VertexId> VisitedVertices(const System& system,
                                      const Attack& attack);

std::string AttackToString(const System& system, const Attack& attack);

// ----------------------------------------------------------------------------
// Defense allocations.

// Nonnegative budget per attack unit, summing to at most the budget. Units
// without an entry carry zero.
class DefenseAllocation {
 public:
  explicit DefenseAllocation(double budget);
  // Throws InfeasibleAllocation on negative entries or overspending.
  DefenseAllocation(double budget, std::map<UnitId, double> amounts);

  double budget() const { return budget_; }
  double at(UnitId id) const;
  double total() const;
  bool is_zero() const;
  const std::map<UnitId, double>& amounts() const { return amounts_; }

  bool operator==(const DefenseAllocation&) const = default;

 private:
  double budget_;
  std::map<UnitId, double> amounts_;
};

// ----------------------------------------------------------------------------
// Evaluation functionals.

// Sum of rewards over the distinct vertices the attack visits.
double Payoff(const System& system, const Attack& attack);

// Sum of d(e)/w(e) over the path edges.
double Cost(const System& system, const Attack& attack,
            const DefenseAllocation& allocation);

double Profit(const System& system, const Attack& attack,
              const DefenseAllocation& allocation);

// Throws InvalidArgument for the empty attack.
ExtendedReal Roa(const System& system, const Attack& attack,
                 const DefenseAllocation& allocation);

// Ratio of summed payoffs to summed costs, with the same conventions as Roa.
ExtendedReal CumulativeRoa(std::span<const double> payoffs,
                           std::span<const double> costs);

// d(e)/w(e) for every edge of the system, indexed by edge id. Summing this
// over a path gives its cost.
std::vector<double> EdgeCharges(const System& system,
                                const DefenseAllocation& allocation);

}  // namespace reactsec

#endif  // REACTSEC_MODEL_H_
