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

#include <algorithm>
#include <limits>

#include "reactsec/attackers.h"
#include "reactsec/fixtures.h"
#include "reactsec/paths.h"
#include "test_util.h"

namespace reactsec {
namespace {

using testing::Rng;

DefenseAllocation Fig2(const System& sys, double left, double right) {
  return DefenseAllocation(sys.budget(), {{*sys.FindEdge("left"), left},
                                          {*sys.FindEdge("right"), right}});
}

TEST(BestResponseTest, AllOnLeftTakesTheFullPath) {
  const System sys = fixtures::DefenseInDepth();
  const auto r = BestResponse(sys, Fig2(sys, 10, 0), Objective::kRoa);
  EXPECT_EQ(r.attack.path.size(), 2u);
  EXPECT_NEAR(r.roa.value(), 5.0, 1e-12);
}

TEST(BestResponseTest, AllOnRightIsFreeAtTheFront) {
  const System sys = fixtures::DefenseInDepth();
  const auto r = BestResponse(sys, Fig2(sys, 0, 10), Objective::kRoa);
  EXPECT_EQ(r.attack.path, std::vector<UnitId>{*sys.FindEdge("left")});
  EXPECT_TRUE(r.roa.is_infinite());
}

TEST(BestResponseTest, EvenSplitTieGoesToTheCheaperPath) {
  const System sys = fixtures::DefenseInDepth();
  const auto r = BestResponse(sys, Fig2(sys, 5, 5), Objective::kRoa);
  EXPECT_EQ(r.attack.path.size(), 1u);
  EXPECT_NEAR(r.cost, 1.0, 1e-12);
  EXPECT_NEAR(r.roa.value(), 1.0, 1e-12);
}

TEST(BestResponseTest, ZeroPayoffEverywhereIsFlagged) {
  const System sys = fixtures::Star(3, 0, 0.0);
  const auto r = BestResponse(sys, UniformDefense(sys), Objective::kRoa);
  EXPECT_TRUE(r.roa_undefined);
  EXPECT_FALSE(r.attack.empty());
}

TEST(BestResponseTest, Profit) {
  const System sys = fixtures::ProfitVsRoa();
  const DefenseAllocation d(9.0, {{*sys.FindEdge("right"), 9.0}});
  const auto r = BestResponse(sys, d, Objective::kProfit);
  // Both edges yield profit 1; the cheaper (left, cost 0) wins.
  EXPECT_EQ(r.attack.path, std::vector<UnitId>{*sys.FindEdge("left")});
  EXPECT_NEAR(r.payoff - r.cost, 1.0, 1e-12);
}

TEST(PathEnumerationTest, MatchesIndependentSearch) {
  Rng rng(41);
  testing::GraphOptions o;
  o.acyclic = false;
  o.max_edges = 9;
  for (int trial = 0; trial < 100; ++trial) {
    const System sys = testing::RandomSystem(rng, o);
    std::vector<std::vector<UnitId>> ours;
    for (const auto& p : EnumeratePaths(sys, 1000000)) ours.push_back(p.attack.path);
    std::vector<std::vector<UnitId>> oracle;
    for (const auto& a : testing::AllPaths(sys)) oracle.push_back(a.path);
    std::sort(ours.begin(), ours.end());
    std::sort(oracle.begin(), oracle.end());
    EXPECT_EQ(ours, oracle);
  }
}

TEST(BestResponsePropertyTest, NoPathBeatsTheBestResponse) {
  Rng rng(42);
  testing::GraphOptions o;
  o.acyclic = false;
  o.max_edges = 10;
  o.budget = 4.0;
  for (int trial = 0; trial < 150; ++trial) {
    const System sys = testing::RandomSystem(rng, o);
    std::map<UnitId, double> m;
    for (const System::Edge& e : sys.edges()) {
      if (testing::Uniform(rng, 0, 1) < 0.7) {
        m[e.id] = sys.budget() / sys.num_edges() * testing::Uniform(rng, 0, 1);
      }
    }
    const DefenseAllocation d(sys.budget(), m);
    const auto dense = testing::Dense(sys, d);
    const auto roa = BestResponse(sys, d, Objective::kRoa);
    const auto profit = BestResponse(sys, d, Objective::kProfit);
    EXPECT_EQ(BestResponse(sys, d, Objective::kRoa).attack, roa.attack);
    double best_profit = -std::numeric_limits<double>::infinity();
    for (const Attack& a : testing::AllPaths(sys)) {
      const double pay = testing::BrutePayoff(sys, a);
      const double cost = testing::BruteCost(sys, a, dense);
      best_profit = std::max(best_profit, pay - cost);
      if (pay > 0 && cost == 0) {
        EXPECT_TRUE(roa.roa.is_infinite());
      } else if (pay > 0 && roa.roa.is_finite()) {
        EXPECT_LE(pay / cost, roa.roa.value() * (1 + 1e-12));
      }
    }
    EXPECT_NEAR(profit.payoff - profit.cost, best_profit, 1e-12);
  }
}

TEST(ObliviousTest, FullVisibilityMatchesTheOrdinaryBestResponse) {
  Rng rng(43);
  for (int trial = 0; trial < 50; ++trial) {
    const System sys = testing::RandomSystem(rng);
    std::set<UnitId> all;
    for (const System::Edge& e : sys.edges()) all.insert(e.id);
    BestResponseAttacker plain(Objective::kRoa);
    BestResponseAttacker oblivious(Objective::kRoa, all);
    const DefenseAllocation d = UniformDefense(sys);
    Rng r1(1), r2(1);
    EXPECT_EQ(plain.Choose(sys, d, 1, r1), oblivious.Choose(sys, d, 1, r2));
  }
}

TEST(ObliviousTest, StaysInsideItsSubgraph) {
  const System sys = fixtures::DefenseInDepth();
  BestResponseAttacker blind(Objective::kRoa,
                             std::set<UnitId>{*sys.FindEdge("left")});
  Rng rng(1);
  const auto a = blind.Choose(sys, Fig2(sys, 10, 0), 1, rng);
  EXPECT_EQ(a.at(0).path, std::vector<UnitId>{*sys.FindEdge("left")});
}

TEST(RandomParallelTest, Frequencies) {
  for (std::size_t n : {1, 2, 3}) {
    const System sys = fixtures::Star(n);
    Rng rng(44);
    std::vector<int> counts(n, 0);
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) ++counts[RandomParallelAttack(sys, rng).path[0].value];
    for (int c : counts) EXPECT_NEAR(c / double(draws), 1.0 / n, 0.02);
  }
}

TEST(RandomParallelTest, SeededSequenceIsReproducible) {
  const System sys = fixtures::TwoEdge();
  Rng a(7), b(7);
  for (int i = 0; i < 100; ++i) {
    EXPECT_EQ(RandomParallelAttack(sys, a), RandomParallelAttack(sys, b));
  }
}

TEST(RandomParallelTest, RejectsNonStar) {
  Rng rng(1);
  EXPECT_THROW(RandomParallelAttack(fixtures::DefenseInDepth(), rng),
               InvalidArgument);
}

TEST(AggregateTest, Examples) {
  const UnitId e1{0}, e2{1};
  const std::vector<Attack> mixed = {Attack{{e1}}, Attack{{e1, e2}}};
  const auto d = AggregateMultiAttack(mixed);
  EXPECT_DOUBLE_EQ(d.at(e1), 2.0 / 3.0);
  EXPECT_DOUBLE_EQ(d.at(e2), 1.0 / 3.0);
  const std::vector<Attack> one = {Attack{{e1, e2}}};
  EXPECT_EQ(AggregateMultiAttack(one).at(e1), 0.5);
  const std::vector<Attack> twice = {Attack{{e1, e2}}, Attack{{e1, e2}}};
  EXPECT_EQ(AggregateMultiAttack(twice), AggregateMultiAttack(one));
}

TEST(AggregateTest, MassesSumToOne) {
  Rng rng(45);
  testing::GraphOptions o;
  o.max_edges = 12;
  for (int trial = 0; trial < 100; ++trial) {
    const System sys = testing::RandomSystem(rng, o);
    const auto paths = testing::AllPaths(sys);
    std::vector<Attack> round;
    for (std::size_t k = testing::Index(rng, 1, 6); k > 0; --k) {
      round.push_back(testing::RandomPath(paths, rng));
    }
    double total = 0.0;
    for (const auto& [id, mass] : AggregateMultiAttack(round)) total += mass;
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(FixedSequenceTest, CyclesThroughItsList) {
  const System sys = fixtures::TwoEdge();
  auto seq = FixedSequenceAttacker::FromAttacks(
      {Attack{{UnitId{1}}}, Attack{{UnitId{0}}}});
  Rng rng(1);
  const DefenseAllocation d(1.0);
  EXPECT_EQ(seq.Choose(sys, d, 1, rng)[0].path[0], UnitId{1});
  EXPECT_EQ(seq.Choose(sys, d, 2, rng)[0].path[0], UnitId{0});
  EXPECT_EQ(seq.Choose(sys, d, 3, rng)[0].path[0], UnitId{1});
}

TEST(UniformRandomPathTest, CoversEveryPath) {
  const System sys = fixtures::DefenseInDepth();
  UniformRandomPathAttacker attacker;
  Rng rng(46);
  std::map<std::size_t, int> lengths;
  for (int i = 0; i < 2000; ++i) {
    ++lengths[attacker.Choose(sys, DefenseAllocation(10.0), 1, rng)[0].path.size()];
  }
  EXPECT_NEAR(lengths[1] / 2000.0, 0.5, 0.05);
  EXPECT_NEAR(lengths[2] / 2000.0, 0.5, 0.05);
}

TEST(MultiAttackerTest, OneAttackPerMember) {
  std::vector<std::unique_ptr<Attacker>> members;
  members.push_back(std::make_unique<BestResponseAttacker>(Objective::kRoa));
  members.push_back(std::make_unique<RandomParallelAttacker>());
  MultiAttacker multi(std::move(members));
  Rng rng(1);
  const System sys = fixtures::TwoEdge();
  EXPECT_EQ(multi.Choose(sys, DefenseAllocation(1.0), 1, rng).size(), 2u);
  EXPECT_EQ(multi.Describe(), "multi(roa-best-response,random-parallel)");
}

}  // namespace
}  // namespace reactsec
