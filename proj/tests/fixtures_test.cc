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

#include "reactsec/analysis.h"
#include "reactsec/attackers.h"
#include "reactsec/defense.h"
#include "reactsec/fixtures.h"
#include "reactsec/io.h"
#include "test_util.h"

namespace reactsec {
namespace {

DefenseAllocation Split(const System& sys, double left, double right) {
  return DefenseAllocation(sys.budget(), {{*sys.FindEdge("left"), left},
                                          {*sys.FindEdge("right"), right}});
}

TEST(FixturesTest, AllValidate) {
  for (const auto& f : fixtures::AllFixtures()) {
    EXPECT_TRUE(ValidateSystem(f.spec).empty()) << f.file_name;
    EXPECT_FALSE(f.notes.empty());
  }
}

TEST(FixturesTest, DefenseInDepthClaims) {
  const System sys = fixtures::DefenseInDepth();
  EXPECT_EQ(sys.num_vertices(), 3u);
  EXPECT_EQ(sys.num_edges(), 2u);
  EXPECT_EQ(sys.budget(), 10.0);
  const auto minimax = MinimaxProactiveDefense(sys, Objective::kRoa);
  EXPECT_NEAR(minimax.allocation.at(*sys.FindEdge("left")), 5.0, 1e-6);
  EXPECT_NEAR(minimax.value.value(), 1.0, 1e-6);
  EXPECT_TRUE(BestResponse(sys, Split(sys, 0, 10), Objective::kRoa).roa.is_infinite());
  EXPECT_NEAR(BestResponse(sys, Split(sys, 10, 0), Objective::kRoa).roa.value(),
              5.0, 1e-9);
  // Brute force over the one-dimensional split: (5, 5) is the unique grid
  // point with worst-case ROA 1.
  for (int i = 0; i <= 100; ++i) {
    const double left = i / 10.0;
    const auto r = BestResponse(sys, Split(sys, left, 10.0 - left), Objective::kRoa);
    if (i == 50) {
      EXPECT_NEAR(r.roa.value(), 1.0, 1e-12);
    } else {
      EXPECT_TRUE(r.roa.is_infinite() || r.roa.value() > 1.0) << left;
    }
  }
}

TEST(FixturesTest, StarSeparation) {
  for (std::size_t n : {2, 4, 8}) {
    const System sys = fixtures::Star(n);
    const auto uniform = BestResponse(sys, UniformDefense(sys), Objective::kRoa);
    const auto rational = MinimaxProactiveDefense(sys, Objective::kRoa);
    EXPECT_NEAR(uniform.roa.value() / rational.value.value(),
                static_cast<double>(n), 1e-9);
  }
}

TEST(FixturesTest, ProfitVsRoaClaims) {
  const System sys = fixtures::ProfitVsRoa();
  const auto profit = MinimaxProactiveDefense(sys, Objective::kProfit);
  EXPECT_NEAR(profit.allocation.at(*sys.FindEdge("right")), 9.0, 1e-6);
  EXPECT_NEAR(profit.value.value(), 1.0, 1e-6);
  const DefenseAllocation all_right = Split(sys, 0, 9);
  EXPECT_TRUE(Roa(sys, Attack{{*sys.FindEdge("left")}}, all_right).is_infinite());
  EXPECT_NEAR(Profit(sys, Attack{{*sys.FindEdge("left")}}, all_right), 1.0, 1e-12);
  EXPECT_NEAR(Profit(sys, Attack{{*sys.FindEdge("right")}}, all_right), 1.0, 1e-12);
  const auto roa = MinimaxProactiveDefense(sys, Objective::kRoa);
  EXPECT_NEAR(roa.value.value(), 11.0 / 9.0, 1e-6);
  EXPECT_LE(roa.value.value(), 1.25);
}

TEST(FixturesTest, NameLookup) {
  EXPECT_EQ(*fixtures::FixtureByName("fig3:8"), fixtures::StarSpec(8));
  EXPECT_EQ(*fixtures::FixtureByName("fig3"), fixtures::StarSpec(4));
  EXPECT_FALSE(fixtures::FixtureByName("fig3:0").has_value());
  EXPECT_FALSE(fixtures::FixtureByName("fig9").has_value());
}

TEST(FixturesTest, ShippedFilesMatchTheBuilders) {
  const std::filesystem::path dir =
      std::filesystem::path(REACTSEC_SOURCE_DIR) / "fixtures";
  for (const auto& f : fixtures::AllFixtures()) {
    const io::LoadedSystem loaded = io::LoadSystem(dir / f.file_name);
    ASSERT_TRUE(std::holds_alternative<System>(loaded)) << f.file_name;
    EXPECT_EQ(std::get<System>(loaded).spec(), f.spec) << f.file_name;
  }
}

}  // namespace
}  // namespace reactsec
