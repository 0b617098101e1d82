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

#include "reactsec/paths.h"

namespace reactsec {
namespace {

class PathSearch {
 public:
  PathSearch(const System& system, std::size_t limit,
             const std::vector<bool>& mask)
      : system_(system),
        limit_(limit),
        mask_(mask),
        edge_used_(system.num_edges(), false) {}

  std::vector<EnumeratedPath> Run() {
    Extend(system_.start());
    return std::move(out_);
  }

 private:

  void Extend(VertexId at) {
    for (UnitId id : system_.out_edges(at)) {
      if (edge_used_[id.value]) continue;
      if (!mask_.empty() && !mask_[id.value]) continue;
      const VertexId next = system_.edge(id).to;
      edge_used_[id.value] = true;
      path_.push_back(id);
      if (out_.size() == limit_) {
        throw EnumerationLimitExceeded(limit_, out_.size() + 1);
      }
      Attack attack{path_};
      const double payoff = Payoff(system_, attack);
      out_.push_back({std::move(attack), payoff});
      Extend(next);
      path_.pop_back();
      edge_used_[id.value] = false;
    }
  }

  const System& system_;
  std::size_t limit_;
  const std::vector<bool>& mask_;
  std::vector<bool> edge_used_;
  std::vector<UnitId> path_;
  std::vector<EnumeratedPath> out_;
};

}  // namespace

std::vector<EnumeratedPath> EnumeratePaths(const System& system,
                                           std::size_t limit,
                                           const std::vector<bool>& edge_mask) {
  return PathSearch(system, limit, edge_mask).Run();
}

}  // namespace reactsec
