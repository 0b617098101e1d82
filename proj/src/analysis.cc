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

#include "reactsec/analysis.h"

#include <cmath>
#include <set>

#include "reactsec/fixtures.h"

namespace reactsec {
namespace {

BoundInputs InputsFor(const System& system, std::size_t horizon) {
  BoundInputs in;
  in.budget = system.budget();
  in.num_edges = system.num_edges();
  in.horizon = horizon;
  in.mean_inverse_surface = MeanInverseSurface(system);
  in.start_surface_sum = StartSurfaceSum(system);
  return in;
}

// Adds one round's edge usage to `counts`. A multi-attacker round counts
// each attacker's usage with weight 1/k.
void AccumulateUsage(const RoundRecord& r, std::vector<double>& counts) {
  const double weight = 1.0 / static_cast<double>(r.attacks.size());
  for (const Attack& a : r.attacks) {
    const std::set<UnitId> used(a.path.begin(), a.path.end());
    for (UnitId id : used) counts[id.value] += weight;
  }
}

std::vector<double> Surfaces(const System& system) {
  std::vector<double> out(system.num_edges());
  for (const System::Edge& e : system.edges()) out[e.id.value] = e.surface;
  return out;
}

}  // namespace

double MeanInverseSurface(const System& system) {
  if (system.num_edges() == 0) return 0.0;
  double total = 0.0;
  for (const System::Edge& e : system.edges()) total += 1.0 / e.surface;
  return total / static_cast<double>(system.num_edges());
}

double StartSurfaceSum(const System& system) {
  double total = 0.0;
  for (UnitId id : system.start_edges()) total += system.surface(id);
  return total;
}

double ProfitRegretBound(double budget, std::size_t num_edges,
                         std::size_t horizon, double mean_inverse_surface) {
  if (num_edges == 0) throw InvalidArgument("regret bound needs edges");
  if (horizon == 0) throw InvalidArgument("regret bound needs T >= 1");
  const double log_e = std::log(static_cast<double>(num_edges));
  const double t = static_cast<double>(horizon);
  return budget * std::sqrt(log_e / (2.0 * t)) +
         budget * (log_e + mean_inverse_surface) / t;
}

HindsightDefense TraceHindsight(const GameTrace& trace, const System& system,
                                std::size_t prefix) {
  if (prefix == 0 || prefix > trace.rounds.size()) {
    throw InvalidArgument("hindsight prefix out of range");
  }
  std::vector<double> counts(system.num_edges(), 0.0);
  for (std::size_t i = 0; i < prefix; ++i) {
    AccumulateUsage(trace.rounds[i], counts);
  }
  return HindsightFromCounts(counts, Surfaces(system), system.budget());
}

BoundReport ProfitRegret(const GameTrace& trace, const System& system) {
  if (trace.defender != "reactive-hidden") {
    throw InvalidArgument("profit regret bound applies to the hidden-edge "
                          "reactive defender with its default schedule, not '" +
                          trace.defender + "'");
  }
  const std::size_t horizon = trace.horizon();
  BoundReport report;
  report.name = "profit-regret";
  report.inputs = InputsFor(system, horizon);
  const HindsightDefense best = TraceHindsight(trace, system, horizon);
  // Payoffs do not depend on the allocation, so the profit difference is the
  // cost difference.
  const double t = static_cast<double>(horizon);
  report.measured =
      ExtendedReal::Finite((best.cumulative_cost - trace.total_cost()) / t);
  report.bound_rhs =
      ProfitRegretBound(system.budget(), system.num_edges(), horizon,
                        report.inputs.mean_inverse_surface);
  report.satisfied =
      report.measured.value() <= report.bound_rhs + kBoundSlack;
  return report;
}

BoundReport RoaRatio(const GameTrace& trace, const System& system,
                     double alpha) {
  if (!(alpha > 0.0)) throw InvalidArgument("alpha must be positive");
  BoundReport report;
  report.name = "roa-ratio";
  report.inputs = InputsFor(system, trace.horizon());
  report.inputs.alpha = alpha;
  report.bound_rhs = 1.0 + alpha;
  const double reactive = trace.total_cost();
  const HindsightDefense best = TraceHindsight(trace, system, trace.horizon());
  if (reactive == 0.0) {
    report.measured = ExtendedReal::Undefined();
    report.satisfied = false;
    return report;
  }
  report.measured = ExtendedReal::Finite(best.cumulative_cost / reactive);
  report.satisfied =
      report.measured.value() <= report.bound_rhs + kBoundSlack;
  return report;
}

std::size_t RoaThresholdT(const System& system, double alpha) {
  if (system.num_edges() <= 1) {
    throw InvalidArgument("ROA threshold needs more than one edge");
  }
  if (!(alpha > 0.0)) throw InvalidArgument("alpha must be positive");
  const double root = 13.0 / std::sqrt(2.0) * (1.0 + 1.0 / alpha) *
                      StartSurfaceSum(system);
  const double t =
      root * root * std::log(static_cast<double>(system.num_edges()));
  return static_cast<std::size_t>(std::ceil(t));
}

GameValue ComputeGameValue(const System& system) {
  const std::span<const UnitId> start_edges = system.start_edges();
  if (start_edges.empty()) {
    throw InvalidArgument("the start vertex has no outgoing edges");
  }
  const double total = StartSurfaceSum(system);
  std::map<UnitId, double> amounts;
  for (UnitId id : start_edges) {
    amounts[id] += system.budget() * system.surface(id) / total;
  }
  return {system.budget() / total,
          DefenseAllocation(system.budget(), std::move(amounts))};
}

std::vector<RegretPoint> RegretCurve(const GameTrace& trace,
                                     const System& system) {
  std::vector<RegretPoint> out;
  out.reserve(trace.rounds.size());
  const std::vector<double> surfaces = Surfaces(system);
  const double mean_inv = MeanInverseSurface(system);
  std::vector<double> counts(system.num_edges(), 0.0);
  double reactive = 0.0;
  for (std::size_t i = 0; i < trace.rounds.size(); ++i) {
    const RoundRecord& r = trace.rounds[i];
    AccumulateUsage(r, counts);
    reactive += r.cost;
    const HindsightDefense best =
        HindsightFromCounts(counts, surfaces, system.budget());
    const std::size_t t = i + 1;
    out.push_back({t, (best.cumulative_cost - reactive) / static_cast<double>(t),
                   ProfitRegretBound(system.budget(), system.num_edges(), t,
                                     mean_inv)});
  }
  return out;
}

LowerBoundStats LowerBoundExperiment(std::size_t horizon,
                                     std::size_t num_seeds,
                                     std::uint64_t base_seed) {
  if (horizon < 2) throw InvalidArgument("lower bound experiment needs T >= 2");
  if (num_seeds == 0) throw InvalidArgument("need at least one seed");
  const System system = fixtures::TwoEdge();
  LowerBoundStats stats;
  stats.horizon = horizon;
  stats.num_seeds = num_seeds;
  for (std::size_t i = 0; i < num_seeds; ++i) {
    ReactiveHiddenDefender defender;
    RandomParallelAttacker attacker;
    const std::uint64_t seed = base_seed + i;
    const GameTrace trace = RunGame(system, defender, attacker, horizon, seed);
    LowerBoundSample sample;
    sample.seed = seed;
    sample.reactive_cost = trace.total_cost();
    sample.hindsight_cost =
        TraceHindsight(trace, system, horizon).cumulative_cost;
    sample.gap = sample.hindsight_cost - sample.reactive_cost;
    stats.mean_reactive_cost += sample.reactive_cost;
    stats.mean_hindsight_cost += sample.hindsight_cost;
    stats.mean_gap += sample.gap;
    stats.samples.push_back(sample);
  }
  const double k = static_cast<double>(num_seeds);
  stats.mean_reactive_cost /= k;
  stats.mean_hindsight_cost /= k;
  stats.mean_gap /= k;
  stats.mean_gap_over_sqrt_t =
      stats.mean_gap / std::sqrt(static_cast<double>(horizon));
  return stats;
}

ExactLowerBound ExactLowerBoundGap(std::size_t horizon) {
  if (horizon == 0 || horizon > 20) {
    throw InvalidArgument("exhaustive lower bound supports 1 <= T <= 20");
  }
  const System system = fixtures::TwoEdge();
  const std::size_t count = std::size_t{1} << horizon;
  ExactLowerBound out;
  out.horizon = horizon;
  out.num_sequences = count;
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<Attack> attacks;
    for (std::size_t t = 0; t < horizon; ++t) {
      attacks.push_back(Attack{{UnitId{(mask >> t) & 1u ? 1u : 0u}}});
    }
    FixedSequenceAttacker replay = FixedSequenceAttacker::FromAttacks(attacks);
    UniformDefender spender;
    const GameTrace spent = RunGame(system, spender, replay, horizon, 0);
    const double hindsight =
        TraceHindsight(spent, system, horizon).cumulative_cost;
    out.expected_gap += hindsight - spent.total_cost();

    ReactiveHiddenDefender reactive;
    const GameTrace learned = RunGame(system, reactive, replay, horizon, 0);
    out.expected_gap_reactive += hindsight - learned.total_cost();
    out.expected_reactive_cost += learned.total_cost();
  }
  const double n = static_cast<double>(count);
  out.expected_gap /= n;
  out.expected_gap_reactive /= n;
  out.expected_reactive_cost /= n;
  return out;
}

}  // namespace reactsec
