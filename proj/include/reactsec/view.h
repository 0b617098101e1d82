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

#ifndef REACTSEC_VIEW_H_
#define REACTSEC_VIEW_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "reactsec/model.h"

namespace reactsec {

// What a reactive defender may know about the system: the edges revealed by
// past attacks with their surfaces and endpoint names, and its own budget.
// Rewards and unrevealed edges are never exposed.
class MaskedView {
 public:
  struct EdgeInfo {
    UnitId id;
    std::string name;
    std::string from;
    std::string to;
    double surface;
  };

  MaskedView(const System& system, const std::set<UnitId>& revealed);

  double budget() const { return budget_; }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return edges_.empty(); }
  // Revealed edges in id order.
  const std::vector<EdgeInfo>& edges() const { return edges_; }
  // Absence (not an error) for edges that have not been revealed.
  std::optional<EdgeInfo> edge(UnitId id) const;
  bool contains(UnitId id) const { return index_.contains(id); }

 private:
  double budget_;
  std::vector<EdgeInfo> edges_;
  std::map<UnitId, std::size_t> index_;
};

}  // namespace reactsec

#endif  // REACTSEC_VIEW_H_
