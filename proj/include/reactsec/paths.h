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

#ifndef REACTSEC_PATHS_H_
#define REACTSEC_PATHS_H_

#include <cstddef>
#include <span>
#include <vector>

#include "reactsec/model.h"

namespace reactsec {

inline constexpr std::size_t kDefaultEnumerationLimit = 10000;

struct EnumeratedPath {
  Attack attack;
  double payoff = 0.0;
};

// All non-empty, edge-simple paths from the start vertex, found by DFS over
// out-edges in id order. An optional mask restricts the search to edges whose
// entry is true. Throws EnumerationLimitExceeded once more than `limit` paths
// exist.
std::vector<EnumeratedPath> EnumeratePaths(
    const System& system, std::size_t limit = kDefaultEnumerationLimit,
    const std::vector<bool>& edge_mask = {});

// Sum of per-edge charges (see EdgeCharges) along a path.
inline double PathCost(const Attack& attack, std::span<const double> charges) {
  double cost = 0.0;
  for (UnitId id : attack.path) cost += charges[id.value];
  return cost;
}

}  // namespace reactsec

#endif  // REACTSEC_PATHS_H_
