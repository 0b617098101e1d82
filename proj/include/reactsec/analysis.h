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

#ifndef REACTSEC_ANALYSIS_H_
#define REACTSEC_ANALYSIS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "reactsec/defense.h"
#include "reactsec/engine.h"
#include "reactsec/model.h"

namespace reactsec {

// Slack on the comparison measured <= bound.
inline constexpr double kBoundSlack = 1e-9;

struct BoundInputs {
  double budget = 0.0;
  std::size_t num_edges = 0;
  std::size_t horizon = 0;
  // Mean of 1/w(e) over all edges.
  double mean_inverse_surface = 0.0;
  // Sum of w(e) over the edges leaving the start vertex.
  double start_surface_sum = 0.0;
  std::optional<double> alpha;
};

struct BoundReport {
  std::string name;
  // Undefined when the ratio has a zero denominator.
  ExtendedReal measured = ExtendedReal::Undefined();
  double bound_rhs = 0.0;
  bool satisfied = false;
  BoundInputs inputs;
};

double MeanInverseSurface(const System& system);
double StartSurfaceSum(const System& system);

// B sqrt(ln|E| / 2T) + B (ln|E| + mean(1/w)) / T.
double ProfitRegretBound(double budget, std::size_t num_edges,
                         std::size_t horizon, double mean_inverse_surface);

// Average attacker profit against the trace's allocations minus the average
// against the best fixed allocation in hindsight, compared with
// ProfitRegretBound. Requires a trace of the hidden-edge reactive defender
// with its default beta schedule.
BoundReport ProfitRegret(const GameTrace& trace, const System& system);

// max_d* sum cost(a_t, d*) / sum cost(a_t, d_t), i.e. the trace's cumulative
// ROA divided by the best fixed allocation's, compared with 1 + alpha.
// Accepts any defender.
BoundReport RoaRatio(const GameTrace& trace, const System& system,
                     double alpha);

// Rounds after which the ROA ratio guarantee applies:
// ceil((13/sqrt2 (1 + 1/alpha) sum_{inc(s)} w)^2 ln|E|).
std::size_t RoaThresholdT(const System& system, double alpha);

struct GameValue {
  // max_d min_a cost(a, d) = B / sum_{inc(s)} w.
  double value = 0.0;
  // B w(e) / sum_{inc(s)} w on each start edge.
  DefenseAllocation witness{1.0};
};

GameValue ComputeGameValue(const System& system);

// Best fixed allocation in hindsight for a trace; multi-attacker rounds
// contribute each edge's usage averaged over the round's attackers.
HindsightDefense TraceHindsight(const GameTrace& trace, const System& system,
                                std::size_t prefix);

struct RegretPoint {
  std::size_t t = 0;
  // (1/t) sum_{s<=t} [profit(a_s, d_s) - profit(a_s, d*_t)].
  double average_regret = 0.0;
  double bound_rhs = 0.0;
};

std::vector<RegretPoint> RegretCurve(const GameTrace& trace,
                                     const System& system);

struct LowerBoundSample {
  std::uint64_t seed = 0;
  double reactive_cost = 0.0;
  double hindsight_cost = 0.0;
  double gap = 0.0;
};

struct LowerBoundStats {
  std::size_t horizon = 0;
  std::size_t num_seeds = 0;
  double mean_reactive_cost = 0.0;
  double mean_hindsight_cost = 0.0;
  double mean_gap = 0.0;
  double mean_gap_over_sqrt_t = 0.0;
  std::vector<LowerBoundSample> samples;
};

// Uniform random single-edge attacks on the two-edge lower-bound system
// against the hidden-edge reactive defender, one game per seed
// (base_seed, base_seed + 1, ...).
LowerBoundStats LowerBoundExperiment(std::size_t horizon,
                                     std::size_t num_seeds,
                                     std::uint64_t base_seed);

struct ExactLowerBound {
  std::size_t horizon = 0;
  std::size_t num_sequences = 0;
  // Expected best-in-hindsight cost minus expected cost of a defender that
  // spends its whole budget every round (E max(N1, N2) - T/2).
  double expected_gap = 0.0;
  // Same expectation against the hidden-edge reactive defender, which spends
  // nothing in round 1.
  double expected_gap_reactive = 0.0;
  double expected_reactive_cost = 0.0;
};

// Exhaustive version over all 2^T attack sequences (T <= 20).
ExactLowerBound ExactLowerBoundGap(std::size_t horizon);

}  // namespace reactsec

#endif  // REACTSEC_ANALYSIS_H_
