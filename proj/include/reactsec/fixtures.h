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

#ifndef REACTSEC_FIXTURES_H_
#define REACTSEC_FIXTURES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "reactsec/model.h"

namespace reactsec::fixtures {

// Chain s -> front -> db. The front edge has surface 5, the db edge 5/9;
// rewards front = 1, db = 9; budget 10. Splitting the budget evenly holds the
// attacker to ROA 1, all on the front edge lets the full path reach ROA 5,
// all on the db edge leaves the front edge free (unbounded ROA).
SystemSpec DefenseInDepthSpec();

// n parallel edges s -> leaf_i with surface 1; only `hot` carries `reward`.
SystemSpec StarSpec(std::size_t leaves, std::size_t hot = 0,
                    double reward = 1.0, double budget = 1.0);

// Two edges from s: left (surface 1, reward 1) and right (surface 1,
// reward 10); budget 9. Minimax on profit funds only the right edge and
// equalizes profit at 1; minimax on ROA gives worst-case ROA 11/9.
SystemSpec ProfitVsRoaSpec();

// Two parallel edges s -> r with surface 1, reward(r) = 1, budget 1.
SystemSpec TwoEdgeSpec();

System DefenseInDepth();
System Star(std::size_t leaves, std::size_t hot = 0, double reward = 1.0,
            double budget = 1.0);
System ProfitVsRoa();
System TwoEdge();

// Names accepted by FixtureByName: "fig2", "fig3" (4 leaves), "fig3:<n>",
// "fig4", "appendixB".
std::optional<SystemSpec> FixtureByName(std::string_view name);

struct NamedFixture {
  std::string file_name;
  SystemSpec spec;
  // Comment block written at the top of the emitted file.
  std::vector<std::string> notes;
};

// Every fixture shipped with the project, as written by `fixtures --emit`.
std::vector<NamedFixture> AllFixtures();

}  // namespace reactsec::fixtures

#endif  // REACTSEC_FIXTURES_H_
