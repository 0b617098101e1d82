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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "reactsec/defense.h"
#include "reactsec/fixtures.h"
#include "reactsec/lp.h"
#include "test_util.h"

namespace reactsec {
namespace {

using testing::Rng;

constexpr UnitId kE1{0};
constexpr UnitId kE2{1};

// ----------------------------------------------------------------------------
// Learning rates.

TEST(BetaScheduleTest, Examples) {
  EXPECT_EQ(BetaSchedule(1, 1), 1.0);
  EXPECT_EQ(BetaSchedule(1, 50), 1.0);
  EXPECT_NEAR(BetaSchedule(2, 1), 1.0 / (1.0 + std::sqrt(std::log(2.0))),
              1e-15);
  EXPECT_NEAR(BetaSchedule(2, 1), 0.54576, 1e-4);
  EXPECT_THROW(BetaSchedule(0, 1), InvalidArgument);
  EXPECT_THROW(BetaSchedule(2, 0), InvalidArgument);
}

TEST(BetaScheduleTest, IncreasesTowardOne) {
  double prev = 0.0;
  for (std::size_t t : {1, 10, 100, 1000, 100000, 10000000}) {
    const double b = BetaSchedule(16, t);
    EXPECT_GT(b, prev);
    EXPECT_LT(b, 1.0);
    prev = b;
  }
  EXPECT_GT(prev, 0.99);
}

TEST(BetaScheduleTest, HorizonForm) {
  EXPECT_NEAR(BetaForHorizon(2, 100),
              1.0 / (1.0 + std::sqrt(2.0 * std::log(2.0) / 100.0)), 1e-15);
}

TEST(NormalizedPowersTest, SurvivesLongHistories) {
  const std::vector<double> s = {-1e6 - 1, -1e6, -1e6 + 2000};
  const auto p = NormalizedPowers(s, 0.5);
  EXPECT_NEAR(p[0], 2.0 / 3.0, 1e-12);
  EXPECT_NEAR(p[1], 1.0 / 3.0, 1e-12);
  EXPECT_EQ(p[2], 0.0);
}

// ----------------------------------------------------------------------------
// Hidden-edge reactive state.

TEST(ReactiveHiddenStateTest, ZeroBeforeFirstAttack) {
  ReactiveHiddenState st(3.0);
  EXPECT_TRUE(st.allocation().is_zero());
  EXPECT_FALSE(st.beta().has_value());
}

TEST(ReactiveHiddenStateTest, SingleEdgeGetsEverything) {
  ReactiveHiddenState st(3.0);
  const std::vector<UnitId> a = {kE1};
  const DefenseAllocation d = st.Step(a, {{kE1, 1.0}});
  EXPECT_EQ(d.at(kE1), 3.0);
  EXPECT_EQ(*st.beta(), 1.0);
}

TEST(ReactiveHiddenStateTest, FixedBetaExample) {
  ReactiveHiddenState st(1.0, 0.5);
  const std::vector<UnitId> both = {kE1, kE2};
  const std::vector<UnitId> first = {kE1};
  st.Step(both, {{kE1, 1.0}, {kE2, 1.0}});
  const DefenseAllocation d = st.Step(first, {{kE1, 1.0}});
  // S = (-2, -1); 0.5^S = (4, 2).
  EXPECT_NEAR(d.at(kE1), 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(d.at(kE2), 1.0 / 3.0, 1e-15);
  EXPECT_EQ(st.cumulative_loss(kE1), -2.0);
}

TEST(ReactiveHiddenStateTest, RejectsBadSurfaces) {
  ReactiveHiddenState st(1.0);
  const std::vector<UnitId> a = {kE1};
  EXPECT_THROW(st.Step(a, {}), InvalidArgument);
  EXPECT_THROW(st.Step(a, {{kE1, 1.0}, {kE2, 1.0}}), InvalidArgument);
  st.Step(a, {{kE1, 2.0}});
  EXPECT_THROW(st.Step(a, {{kE1, 3.0}}), InvalidArgument);
  EXPECT_THROW(st.Step(std::vector<UnitId>{}, {}), InvalidArgument);
}

TEST(ReactiveHiddenStateTest, MonotoneReinforcement) {
  Rng rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    ReactiveHiddenState st(1.0);
    std::map<UnitId, double> w;
    for (std::uint32_t i = 0; i < 6; ++i) w[UnitId{i}] = testing::Uniform(rng, 1, 10);
    for (int t = 0; t < 30; ++t) {
      std::vector<UnitId> a;
      std::map<UnitId, double> sw;
      for (const auto& [id, s] : w) {
        if (testing::Uniform(rng, 0, 1) < 0.4) {
          a.push_back(id);
          sw[id] = s;
        }
      }
      if (a.empty()) continue;
      const auto before = st.allocation();
      const auto after = st.Step(a, sw);
      EXPECT_NEAR(after.total(), 1.0, 1e-9);
      if (before.is_zero()) continue;
      const std::set<UnitId> hit(a.begin(), a.end());
      for (UnitId e : hit) {
        for (UnitId f : st.revealed()) {
          if (hit.contains(f) || before.at(f) == 0.0 || before.at(e) == 0.0) {
            continue;
          }
          EXPECT_GT(after.at(e) / after.at(f), before.at(e) / before.at(f));
        }
      }
      for (UnitId f : st.revealed()) EXPECT_LE(st.cumulative_loss(f), 0.0);
    }
  }
}

// ----------------------------------------------------------------------------
// Known-edge reactive state.

TEST(ReactiveKnownStateTest, Example) {
  ReactiveKnownState st({kE1, kE2}, {1.0, 1.0}, 1.0, 0.5);
  EXPECT_NEAR(st.probabilities()[0], 0.5, 1e-15);
  const std::vector<UnitId> a = {kE1};
  st.Step(a);
  EXPECT_NEAR(st.probabilities()[0], 2.0 / 3.0, 1e-15);
  EXPECT_NEAR(st.probabilities()[1], 1.0 / 3.0, 1e-15);
}

TEST(ReactiveKnownStateTest, ZeroLossLeavesPUnchanged) {
  ReactiveKnownState st({kE1, kE2, UnitId{2}}, {1.0, 2.0, 3.0}, 1.0, 0.7);
  const std::vector<UnitId> a = {kE2};
  st.Step(a);
  const auto before = st.probabilities();
  st.StepLosses(std::vector<double>{0.0, 0.0, 0.0});
  const auto after = st.probabilities();
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(after[i], before[i], 1e-15);
}

TEST(ReactiveKnownStateTest, UnknownEdgeIsRejected) {
  ReactiveKnownState st({kE1}, {1.0}, 1.0, 0.5);
  const std::vector<UnitId> a = {kE2};
  EXPECT_THROW(st.Step(a), InvalidArgument);
}

TEST(ReactiveKnownStateTest, ShiftInvariance) {
  Rng rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = testing::Index(rng, 2, 8);
    std::vector<UnitId> units;
    std::vector<double> w;
    for (std::uint32_t i = 0; i < n; ++i) {
      units.push_back(UnitId{i});
      w.push_back(testing::Uniform(rng, 1, 10));
    }
    ReactiveKnownState plain(units, w, 2.0, 0.8);
    ReactiveKnownState shifted(units, w, 2.0, 0.8);
    const double c = testing::Uniform(rng, -5, 5);
    for (int t = 0; t < 40; ++t) {
      std::vector<double> m(n), mc(n);
      for (std::size_t i = 0; i < n; ++i) {
        m[i] = testing::Uniform(rng, 0, 1) < 0.5 ? -1.0 / w[i] : 0.0;
        mc[i] = m[i] + c;
      }
      plain.StepLosses(m);
      shifted.StepLosses(mc);
      const auto p = plain.probabilities();
      const auto q = shifted.probabilities();
      for (std::size_t i = 0; i < n; ++i) EXPECT_NEAR(p[i], q[i], 1e-9);
    }
  }
}

// Hidden-edge allocations equal known-edge allocations run on the revealed
// subgraph with the hidden state's current beta.
TEST(ReactiveEquivalenceTest, HiddenMatchesKnownOnRevealedSubgraph) {
  Rng rng(33);
  testing::GraphOptions o;
  o.max_edges = 12;
  for (int trial = 0; trial < 20; ++trial) {
    const System sys = testing::RandomSystem(rng, o);
    const auto paths = testing::AllPaths(sys);
    ReactiveHiddenState hidden(sys.budget());
    std::vector<Attack> history;
    for (int t = 1; t <= 25; ++t) {
      const Attack a = testing::RandomPath(paths, rng);
      history.push_back(a);
      std::map<UnitId, double> sw;
      for (UnitId id : a.path) sw[id] = sys.surface(id);
      const DefenseAllocation d = hidden.Step(a.path, sw);
      std::vector<UnitId> revealed(hidden.revealed().begin(),
                                   hidden.revealed().end());
      std::vector<double> w;
      for (UnitId id : revealed) w.push_back(sys.surface(id));
      ReactiveKnownState known(revealed, w, sys.budget(),
                               BetaSchedule(revealed.size(), t));
      for (const Attack& h : history) known.Step(h.path);
      const DefenseAllocation k = known.allocation();
      for (UnitId id : revealed) EXPECT_NEAR(d.at(id), k.at(id), 1e-9);
    }
  }
}

// ----------------------------------------------------------------------------
// Perimeter defense.

TEST(MinCutTest, TwoParallelEdges) {
  const System sys = fixtures::TwoEdge();
  const auto r = MinCutPerimeterDefense(sys, *sys.FindVertex("r"));
  EXPECT_DOUBLE_EQ(r.allocation.at(kE1), 0.5);
  EXPECT_DOUBLE_EQ(r.allocation.at(kE2), 0.5);
  EXPECT_DOUBLE_EQ(r.cut_weight, 2.0);
}

TEST(MinCutTest, DefenseInDepthCutsTheNarrowEdge) {
  const System sys = fixtures::DefenseInDepth();
  const auto r = MinCutPerimeterDefense(sys, *sys.FindVertex("db"));
  EXPECT_EQ(r.allocation.at(*sys.FindEdge("right")), 10.0);
  EXPECT_EQ(r.allocation.at(*sys.FindEdge("left")), 0.0);
}

TEST(MinCutTest, DiamondBottleneck) {
  SystemSpec spec;
  spec.vertices = {{"s", 0}, {"a", 0}, {"b", 0}, {"m", 0}, {"t", 1}};
  spec.edges = {{"sa", "s", "a", 4}, {"sb", "s", "b", 4}, {"am", "a", "m", 3},
                {"bm", "b", "m", 3}, {"mt", "m", "t", 2}};
  spec.start = "s";
  spec.budget = 7;
  const System sys = System::Build(spec);
  const auto r = MinCutPerimeterDefense(sys, *sys.FindVertex("t"));
  EXPECT_EQ(r.allocation.at(*sys.FindEdge("mt")), 7.0);
  EXPECT_EQ(r.cut.size(), 1u);
}

TEST(MinCutTest, Errors) {
  const System sys = fixtures::DefenseInDepth();
  EXPECT_THROW(MinCutPerimeterDefense(sys, sys.start()), InvalidArgument);
  SystemSpec spec = fixtures::TwoEdgeSpec();
  spec.vertices.push_back({"island", 1});
  const System cut_off = System::Build(spec);
  EXPECT_THROW(MinCutPerimeterDefense(cut_off, *cut_off.FindVertex("island")),
               InvalidArgument);
}

TEST(MinCutTest, MatchesBruteForceAndBoundsEveryPath) {
  Rng rng(34);
  testing::GraphOptions o;
  o.acyclic = false;
  o.max_edges = 10;
  o.budget = 5.0;
  int checked = 0;
  while (checked < 60) {
    const System sys = testing::RandomSystem(rng, o);
    const auto reach = testing::Reachable(sys);
    for (std::uint32_t t : reach) {
      if (t == sys.start().value) continue;
      const auto r = MinCutPerimeterDefense(sys, VertexId{t});
      EXPECT_TRUE(testing::RelClose(r.cut_weight,
                                    testing::BruteMinCut(sys, VertexId{t}),
                                    1e-12));
      EXPECT_NEAR(r.allocation.total(), sys.budget(), 1e-9 * sys.budget());
      const auto d = testing::Dense(sys, r.allocation);
      for (const Attack& a : testing::AllPaths(sys)) {
        if (sys.edge(a.path.back()).to.value != t) continue;
        EXPECT_GE(testing::BruteCost(sys, a, d),
                  sys.budget() / r.cut_weight - 1e-9);
      }
      ++checked;
    }
  }
}

// ----------------------------------------------------------------------------
// Rational proactive defense.

TEST(MinimaxTest, DefenseInDepthRoa) {
  const System sys = fixtures::DefenseInDepth();
  const auto r = MinimaxProactiveDefense(sys, Objective::kRoa);
  EXPECT_NEAR(r.allocation.at(*sys.FindEdge("left")), 5.0, 1e-6);
  EXPECT_NEAR(r.allocation.at(*sys.FindEdge("right")), 5.0, 1e-6);
  EXPECT_NEAR(r.value.value(), 1.0, 1e-6);
  EXPECT_EQ(r.num_attacks, 2u);
}

TEST(MinimaxTest, ProfitVsRoaProfit) {
  const System sys = fixtures::ProfitVsRoa();
  const auto r = MinimaxProactiveDefense(sys, Objective::kProfit);
  EXPECT_NEAR(r.allocation.at(*sys.FindEdge("left")), 0.0, 1e-6);
  EXPECT_NEAR(r.allocation.at(*sys.FindEdge("right")), 9.0, 1e-6);
  EXPECT_NEAR(r.value.value(), 1.0, 1e-6);
}

TEST(MinimaxTest, SymmetricParallelEdges) {
  const System sys = fixtures::TwoEdge();
  const auto r = MinimaxProactiveDefense(sys, Objective::kRoa);
  EXPECT_NEAR(r.allocation.at(kE1), 0.5, 1e-6);
  EXPECT_NEAR(r.allocation.at(kE2), 0.5, 1e-6);
}

TEST(MinimaxTest, EnumerationLimit) {
  const System sys = fixtures::Star(5);
  try {
    MinimaxProactiveDefense(sys, Objective::kRoa, 3);
    FAIL() << "expected EnumerationLimitExceeded";
  } catch (const EnumerationLimitExceeded& e) {
    EXPECT_EQ(e.limit(), 3u);
    EXPECT_GT(e.count(), 3u);
  }
}

// The solver's worst case is never beaten by any allocation on a grid.
TEST(MinimaxTest, NoGridAllocationDoesBetter) {
  Rng rng(35);
  testing::GraphOptions o;
  o.max_edges = 3;
  o.max_vertices = 4;
  o.budget = 2.0;
  for (int trial = 0; trial < 25; ++trial) {
    const System sys = testing::RandomSystem(rng, o);
    const auto paths = testing::AllPaths(sys);
    const auto roa = MinimaxProactiveDefense(sys, Objective::kRoa);
    const auto profit = MinimaxProactiveDefense(sys, Objective::kProfit);
    double grid_roa = std::numeric_limits<double>::infinity();
    double grid_profit = std::numeric_limits<double>::infinity();
    testing::ForEachGridAllocation(
        sys.num_edges(), 60, sys.budget(), [&](const std::vector<double>& d) {
          double worst_roa = 0.0;
          double worst_profit = -std::numeric_limits<double>::infinity();
          for (const Attack& a : paths) {
            const double pay = testing::BrutePayoff(sys, a);
            const double cost = testing::BruteCost(sys, a, d);
            worst_profit = std::max(worst_profit, pay - cost);
            if (pay > 0) {
              worst_roa = std::max(worst_roa, cost > 0 ? pay / cost
                                                       : std::numeric_limits<double>::infinity());
            }
          }
          grid_roa = std::min(grid_roa, worst_roa);
          grid_profit = std::min(grid_profit, worst_profit);
        });
    if (roa.value.is_finite()) {
      EXPECT_LE(roa.value.value(), grid_roa * (1 + 1e-6) + 1e-9);
    }
    EXPECT_LE(profit.value.value(), grid_profit + 1e-6);
    EXPECT_GE(profit.value.value(),
              grid_profit - sys.num_edges() * sys.budget() / 60.0);
  }
}

// ----------------------------------------------------------------------------
// Hindsight, uniform and myopic.

TEST(HindsightTest, ChainExample) {
  SystemSpec spec;
  spec.vertices = {{"s", 0}, {"a", 1}, {"b", 1}};
  spec.edges = {{"e1", "s", "a", 1}, {"e2", "a", "b", 1}};
  spec.start = "s";
  const System sys = System::Build(spec);
  const std::vector<Attack> attacks = {Attack{{kE1}}, Attack{{kE1, kE2}}};
  const auto h = HindsightBestProactive(sys, attacks);
  EXPECT_EQ(h.allocation.at(kE1), 1.0);
  EXPECT_EQ(h.cumulative_cost, 2.0);
  EXPECT_NEAR(testing::GridHindsightCost(sys, attacks, 100), 2.0, 1e-12);
}

TEST(HindsightTest, TiesGoToTheSmallestId) {
  const System sys = fixtures::TwoEdge();
  const std::vector<Attack> attacks = {Attack{{kE2}}, Attack{{kE1}}};
  const auto h = HindsightBestProactive(sys, attacks);
  EXPECT_EQ(h.unit, kE1);
  EXPECT_EQ(h.cumulative_cost, 1.0);
}

TEST(HindsightTest, AllZeroCountsIsAnError) {
  const std::vector<double> counts = {0.0, 0.0};
  const std::vector<double> w = {1.0, 1.0};
  EXPECT_THROW(HindsightFromCounts(counts, w, 1.0), InvalidArgument);
}

TEST(HindsightTest, AgreesWithGrid) {
  Rng rng(36);
  testing::GraphOptions o;
  o.max_edges = 4;
  o.max_vertices = 4;
  o.budget = 3.0;
  for (int trial = 0; trial < 30; ++trial) {
    const System sys = testing::RandomSystem(rng, o);
    const auto paths = testing::AllPaths(sys);
    std::vector<Attack> attacks;
    for (int i = 0; i < 12; ++i) attacks.push_back(testing::RandomPath(paths, rng));
    const auto h = HindsightBestProactive(sys, attacks);
    // Vertex solutions lie on the grid, so the two agree up to round-off.
    EXPECT_TRUE(testing::RelClose(
        h.cumulative_cost, testing::GridHindsightCost(sys, attacks, 40), 1e-12));
  }
}

TEST(BaselineTest, UniformStar) {
  const System sys = fixtures::Star(4);
  const auto d = UniformDefense(sys);
  for (const System::Edge& e : sys.edges()) EXPECT_EQ(d.at(e.id), 0.25);
}

TEST(BaselineTest, Myopic) {
  const std::vector<UnitId> one = {kE1};
  EXPECT_EQ(MyopicDefense(one, {{kE1, 1.0}}, 1.0).at(kE1), 1.0);
  const std::vector<UnitId> two = {kE1, kE2};
  const auto d = MyopicDefense(two, {{kE1, 1.0}, {kE2, 3.0}}, 4.0);
  EXPECT_DOUBLE_EQ(d.at(kE1), 1.0);
  EXPECT_DOUBLE_EQ(d.at(kE2), 3.0);
  EXPECT_THROW(MyopicDefense(std::vector<UnitId>{}, {}, 1.0), InvalidArgument);
}

// ----------------------------------------------------------------------------
// Simplex.

TEST(LpTest, SmallOptimum) {
  // max 3x + 2y s.t. x + y <= 4, x + 3y <= 6, x <= 3.
  const lp::Solution s = lp::Maximize({{{1, 1}, {1, 3}, {1, 0}}, {4, 6, 3}, {3, 2}});
  ASSERT_EQ(s.status, lp::Status::kOptimal);
  EXPECT_NEAR(s.objective, 11.0, 1e-9);
  EXPECT_NEAR(s.x[0], 3.0, 1e-9);
  EXPECT_NEAR(s.x[1], 1.0, 1e-9);
}

TEST(LpTest, NegativeRightHandSide) {
  // max -x s.t. -x <= -2 (x >= 2).
  const lp::Solution s = lp::Maximize({{{-1}}, {-2}, {-1}});
  ASSERT_EQ(s.status, lp::Status::kOptimal);
  EXPECT_NEAR(s.x[0], 2.0, 1e-9);
}

TEST(LpTest, InfeasibleAndUnbounded) {
  EXPECT_EQ(lp::Maximize({{{1}, {-1}}, {1, -2}, {1}}).status,
            lp::Status::kInfeasible);
  EXPECT_EQ(lp::Maximize({{{-1}}, {1}, {1}}).status, lp::Status::kUnbounded);
}

}  // namespace
}  // namespace reactsec
