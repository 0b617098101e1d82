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

#ifndef REACTSEC_DEFENSE_H_
#define REACTSEC_DEFENSE_H_

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "reactsec/model.h"
#include "reactsec/paths.h"

namespace reactsec {

// Attacker objective a defense is optimized against.
enum class Objective { kRoa, kProfit };

const char* ObjectiveName(Objective objective);
Objective ParseObjective(std::string_view name);

// Learning rate for the hidden-edge reactive defender after `round` attacks
// have revealed `num_units` units: (1 + sqrt(2 ln(num_units) / (round + 1)))^-1.
// Equals 1 when only one unit is known.
double BetaSchedule(std::size_t num_units, std::size_t round);

// Fixed learning rate for the known-edge defender with horizon T:
// (1 + sqrt(2 ln(num_units) / T))^-1.
double BetaForHorizon(std::size_t num_units, std::size_t horizon);

// beta^S(e) for each cumulative loss S(e) <= 0, normalized to sum to one.
// Computed in log space with the largest exponent factored out so that long
// attack histories do not overflow.
std::vector<double> NormalizedPowers(std::span<const double> cumulative,
                                     double beta);

// State of the reactive defender that starts with no knowledge of the system
// and learns edges (and their surfaces) only as attacks use them.
//
// After the t-th attack a_t the revealed set grows by the edges of a_t, each
// revealed edge accumulates S(e) += -1[e in a_t] / w(e), and the next
// allocation is B * beta_t^S(e) normalized over the revealed set, with
// beta_t = BetaSchedule(|revealed|, t) unless a fixed beta was supplied.
// Before the first attack the allocation is identically zero.
class ReactiveHiddenState {
 public:
  explicit ReactiveHiddenState(double budget,
                               std::optional<double> fixed_beta = {});

  // Consumes one attack. `surfaces` must hold exactly the attack's units.
  // Throws InvalidArgument on an empty attack, a missing surface, or a
  // surface that disagrees with an earlier revelation.
  DefenseAllocation Step(std::span<const UnitId> attack,
                         const std::map<UnitId, double>& surfaces);

  // Fractional update used for multi-attacker rounds: S(e) -= mass(e)/w(e).
  DefenseAllocation StepWeighted(const std::map<UnitId, double>& mass,
                                 const std::map<UnitId, double>& surfaces);

  DefenseAllocation allocation() const;
  // Normalized allocation over the revealed units, in reveal order.
  std::vector<double> probabilities() const;

  double budget() const { return budget_; }
  std::size_t round() const { return round_; }
  std::span<const UnitId> revealed() const { return revealed_; }
  bool is_revealed(UnitId id) const { return index_.contains(id); }
  double cumulative_loss(UnitId id) const;
  double surface(UnitId id) const;
  // Beta used for the current allocation; empty before the first attack.
  std::optional<double> beta() const { return beta_; }

 private:
  void Reveal(UnitId id, double surface);
  DefenseAllocation Finish();

  double budget_;
  std::optional<double> fixed_beta_;
  std::size_t round_ = 0;
  std::vector<UnitId> revealed_;
  std::map<UnitId, std::size_t> index_;
  std::vector<double> surfaces_;
  std::vector<double> cumulative_;
  std::optional<double> beta_;
};

// Multiplicative-weights defender that knows every unit and surface from the
// start. P_1 is uniform; each round P(e) <- P(e) * beta^M(e, a) / Z with
// M(e, a) = -1[e in a] / w(e).
class ReactiveKnownState {
 public:
  ReactiveKnownState(std::vector<UnitId> units, std::vector<double> surfaces,
                     double budget, double beta);
  static ReactiveKnownState WithHorizon(std::vector<UnitId> units,
                                        std::vector<double> surfaces,
                                        double budget, std::size_t horizon);

  // Throws InvalidArgument when the attack uses a unit the state does not
  // know.
  void Step(std::span<const UnitId> attack);
  // Update with an arbitrary loss column M(., a), one entry per unit in
  // construction order.
  void StepLosses(std::span<const double> losses);

  std::span<const UnitId> units() const { return units_; }
  std::vector<double> probabilities() const;
  DefenseAllocation allocation() const;
  double beta() const { return beta_; }
  std::size_t round() const { return round_; }

 private:
  std::vector<UnitId> units_;
  std::vector<double> surfaces_;
  std::map<UnitId, std::size_t> index_;
  double budget_;
  double beta_;
  std::size_t round_ = 1;
  // log P_t(e); kept normalized so that logsumexp is zero.
  std::vector<double> log_p_;
};

struct PerimeterDefense {
  DefenseAllocation allocation;
  std::vector<UnitId> cut;
  double cut_weight = 0.0;
};

// Spreads the budget over a minimum-weight s-t cut (capacities = surfaces),
// proportionally to each cut edge's surface. Throws InvalidArgument when the
// target is the start vertex or unreachable from it.
PerimeterDefense MinCutPerimeterDefense(const System& system, VertexId target);

struct MinimaxDefense {
  DefenseAllocation allocation;
  // Worst-case objective over the enumerated attacks under `allocation`.
  ExtendedReal value;
  std::size_t num_attacks = 0;
};

// Fixed allocation minimizing the attacker's best objective over all
// enumerated attacks. ROA is solved as: maximize z subject to
// cost(a, d) >= z * payoff(a) for every attack with positive payoff; profit
// as: minimize u subject to payoff(a) - cost(a, d) <= u for every attack.
MinimaxDefense MinimaxProactiveDefense(
    const System& system, Objective objective,
    std::size_t limit = kDefaultEnumerationLimit);

struct HindsightDefense {
  DefenseAllocation allocation;
  double cumulative_cost = 0.0;
  UnitId unit;
};

// The fixed allocation that maximizes total attacker cost over a known attack
// sequence. Total cost is linear in d, sum_e d(e) N(e) / w(e) with N(e) the
// number of attacks using e, so the optimum puts the whole budget on one unit
// maximizing N(e)/w(e) (smallest id on ties).
HindsightDefense HindsightBestProactive(const System& system,
                                        std::span<const Attack> attacks);

// Same maximization from per-unit usage weights (indexed by unit id). Throws
// InvalidArgument when every weight is zero.
HindsightDefense HindsightFromCounts(std::span<const double> counts,
                                     std::span<const double> surfaces,
                                     double budget);

DefenseAllocation UniformDefense(const System& system);

// Whole budget on the last attack's edges, proportional to their surfaces.
DefenseAllocation MyopicDefense(std::span<const UnitId> last_attack,
                                const std::map<UnitId, double>& surfaces,
                                double budget);
DefenseAllocation MyopicDefense(const System& system, const Attack& last);

}  // namespace reactsec

#endif  // REACTSEC_DEFENSE_H_
