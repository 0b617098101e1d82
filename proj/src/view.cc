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

#include "reactsec/view.h"

namespace reactsec {

MaskedView::MaskedView(const System& system, const std::set<UnitId>& revealed)
    : budget_(system.budget()) {
  for (UnitId id : revealed) {
    if (id.value >= system.num_edges()) {
      throw InvalidArgument("revealed edge #" + std::to_string(id.value) +
                            " is not part of the system");
    }
    const System::Edge& e = system.edge(id);
    index_.emplace(id, edges_.size());
    edges_.push_back({id, e.name, system.vertex_name(e.from),
                      system.vertex_name(e.to), e.surface});
  }
}

std::optional<MaskedView::EdgeInfo> MaskedView::edge(UnitId id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return edges_[it->second];
}

}  // namespace reactsec
