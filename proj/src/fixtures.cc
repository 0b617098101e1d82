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

#include "reactsec/fixtures.h"

#include <charconv>

namespace reactsec::fixtures {

SystemSpec DefenseInDepthSpec() {
  SystemSpec spec;
  spec.vertices = {{"s", 0.0}, {"front", 1.0}, {"db", 9.0}};
  spec.edges = {{"left", "s", "front", 5.0}, {"right", "front", "db", 5.0 / 9.0}};
  spec.start = "s";
  spec.budget = 10.0;
  return spec;
}

SystemSpec StarSpec(std::size_t leaves, std::size_t hot, double reward,
                    double budget) {
  if (leaves == 0) throw InvalidArgument("a star needs at least one leaf");
  if (hot >= leaves) throw InvalidArgument("hot leaf index out of range");
  SystemSpec spec;
  spec.vertices.push_back({"s", 0.0});
  for (std::size_t i = 0; i < leaves; ++i) {
    const std::string leaf = "leaf" + std::to_string(i);
    spec.vertices.push_back({leaf, i == hot ? reward : 0.0});
    spec.edges.push_back({"e" + std::to_string(i), "s", leaf, 1.0});
  }
  spec.start = "s";
  spec.budget = budget;
  return spec;
}

SystemSpec ProfitVsRoaSpec() {
  SystemSpec spec;
  spec.vertices = {{"s", 0.0}, {"left_target", 1.0}, {"right_target", 10.0}};
  spec.edges = {{"left", "s", "left_target", 1.0},
                {"right", "s", "right_target", 1.0}};
  spec.start = "s";
  spec.budget = 9.0;
  return spec;
}

SystemSpec TwoEdgeSpec() {
  SystemSpec spec;
  spec.vertices = {{"s", 0.0}, {"r", 1.0}};
  spec.edges = {{"e1", "s", "r", 1.0}, {"e2", "s", "r", 1.0}};
  spec.start = "s";
  spec.budget = 1.0;
  return spec;
}

System DefenseInDepth() { return System::Build(DefenseInDepthSpec()); }
System Star(std::size_t leaves, std::size_t hot, double reward,
            double budget) {
  return System::Build(StarSpec(leaves, hot, reward, budget));
}
System ProfitVsRoa() { return System::Build(ProfitVsRoaSpec()); }
System TwoEdge() { return System::Build(TwoEdgeSpec()); }

std::optional<SystemSpec> FixtureByName(std::string_view name) {
  if (name == "fig2") return DefenseInDepthSpec();
  if (name == "fig3") return StarSpec(4);
  if (name == "fig4") return ProfitVsRoaSpec();
  if (name == "appendixB") return TwoEdgeSpec();
  constexpr std::string_view kStarPrefix = "fig3:";
  if (name.starts_with(kStarPrefix)) {
    const std::string_view digits = name.substr(kStarPrefix.size());
    std::size_t n = 0;
    auto [end, ec] = std::from_chars(digits.data(),
                                     digits.data() + digits.size(), n);
    if (ec == std::errc() && end == digits.data() + digits.size() && n > 0) {
      return StarSpec(n);
    }
  }
  return std::nullopt;
}

std::vector<NamedFixture> AllFixtures() {
  std::vector<NamedFixture> out;
  out.push_back(
      {"fig2_defense_in_depth.yaml",
       DefenseInDepthSpec(),
       {"Defense in depth: chain s -> front -> db.",
        "Constraints realized:",
        "  - even split (5, 5) is the ROA minimax defense, worst-case ROA 1",
        "  - all budget on 'right' leaves 'left' free: unbounded ROA",
        "  - all budget on 'left': best attack is the full path with ROA 5",
        "Verified by FixturesTest.DefenseInDepthClaims and acceptance #4."}});
  for (std::size_t n : {2, 4, 8}) {
    out.push_back(
        {"fig3_star_" + std::to_string(n) + ".yaml",
         StarSpec(n),
         {"Star with " + std::to_string(n) +
              " unit-surface leaves; reward 1 only at leaf0.",
          "Constraints realized:",
          "  - uniform defense vs the rational proactive defense has ROA",
          "    ratio equal to the number of leaves",
          "Verified by FixturesTest.StarSeparation and acceptance #5."}});
  }
  out.push_back(
      {"fig4_profit_vs_roa.yaml",
       ProfitVsRoaSpec(),
       {"Objective separation: two edges from s, budget 9.",
        "Constraints realized:",
        "  - profit minimax puts all 9 on 'right'; profit is 1 on both edges",
        "  - under that defense 'left' has unbounded ROA",
        "  - ROA minimax keeps worst-case ROA at 11/9",
        "Verified by FixturesTest.ProfitVsRoaClaims and acceptance #6."}});
  out.push_back(
      {"appendixB_two_edge.yaml",
       TwoEdgeSpec(),
       {"Lower-bound instance: parallel edges e1, e2 from s to r.",
        "Surfaces 1, reward(r) = 1, budget 1.",
        "Verified by LowerBoundTest.ExactEnumeration and acceptance #9."}});
  return out;
}

}  // namespace reactsec::fixtures
