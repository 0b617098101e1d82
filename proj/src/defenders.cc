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

#include "reactsec/defenders.h"

#include <sstream>

namespace reactsec {
namespace {

std::string FormatDouble(double x) {
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

const System& RequireSystem(const DefenderView& view) {
  if (view.system == nullptr) {
    throw InvalidArgument("defender requires full system knowledge");
  }
  return *view.system;
}

}  // namespace

std::string ReactiveHiddenDefender::Describe() const {
  if (fixed_beta_) return "reactive-hidden(beta=" + FormatDouble(*fixed_beta_) + ")";
  return "reactive-hidden";
}

DefenseAllocation ReactiveHiddenDefender::Commit(const DefenderView& view) {
  if (!state_) state_.emplace(view.revealed.budget(), fixed_beta_);
  for (UnitId id : state_->revealed()) {
    if (!view.revealed.contains(id)) {
      throw InvalidArgument("defender state references an unrevealed edge");
    }
  }
  return state_->allocation();
}

void ReactiveHiddenDefender::Observe(const Observation& observation) {
  if (!state_) throw InvalidArgument("observation before the first commit");
  if (observation.multi()) {
    state_->StepWeighted(observation.distribution, observation.surfaces);
    return;
  }
  const Attack& attack = observation.attacks.at(0);
  std::map<UnitId, double> surfaces;
  for (UnitId id : attack.path) surfaces.emplace(id, observation.surfaces.at(id));
  state_->Step(attack.path, surfaces);
}

std::optional<double> ReactiveHiddenDefender::beta() const {
  return state_ ? state_->beta() : std::nullopt;
}

ReactiveKnownDefender::ReactiveKnownDefender(std::optional<std::size_t> horizon,
                                             std::optional<double> beta)
    : horizon_(horizon), beta_(beta) {
  if (!horizon_ && !beta_) {
    throw InvalidArgument("known-edge defender needs a horizon or a beta");
  }
}

std::string ReactiveKnownDefender::Describe() const {
  if (beta_) return "reactive-known(beta=" + FormatDouble(*beta_) + ")";
  return "reactive-known(T=" + std::to_string(*horizon_) + ")";
}

DefenseAllocation ReactiveKnownDefender::Commit(const DefenderView& view) {
  if (!state_) {
    const System& system = RequireSystem(view);
    std::vector<UnitId> units;
    std::vector<double> surfaces;
    for (const System::Edge& e : system.edges()) {
      units.push_back(e.id);
      surfaces.push_back(e.surface);
    }
    const double beta =
        beta_ ? *beta_ : BetaForHorizon(units.size(), *horizon_);
    state_.emplace(std::move(units), std::move(surfaces), system.budget(),
                   beta);
  }
  return state_->allocation();
}

void ReactiveKnownDefender::Observe(const Observation& observation) {
  if (!state_) throw InvalidArgument("observation before the first commit");
  if (!observation.multi()) {
    state_->Step(observation.attacks.at(0).path);
    return;
  }
  std::vector<double> losses(state_->units().size(), 0.0);
  for (std::size_t i = 0; i < losses.size(); ++i) {
    const UnitId id = state_->units()[i];
    auto it = observation.distribution.find(id);
    if (it != observation.distribution.end()) {
      losses[i] = -it->second / observation.surfaces.at(id);
    }
  }
  state_->StepLosses(losses);
}

std::optional<double> ReactiveKnownDefender::beta() const {
  if (state_) return state_->beta();
  return beta_;
}

DefenseAllocation MyopicDefender::Commit(const DefenderView& view) {
  if (last_.empty()) return DefenseAllocation(view.revealed.budget());
  return MyopicDefense(last_, surfaces_, view.revealed.budget());
}

void MyopicDefender::Observe(const Observation& observation) {
  last_.clear();
  surfaces_ = observation.surfaces;
  for (const Attack& a : observation.attacks) {
    last_.insert(last_.end(), a.path.begin(), a.path.end());
  }
}

DefenseAllocation FixedDefender::Commit(const DefenderView& view) {
  RequireSystem(view);
  return allocation_;
}

DefenseAllocation UniformDefender::Commit(const DefenderView& view) {
  return UniformDefense(RequireSystem(view));
}

std::string MinimaxDefender::Describe() const {
  return std::string("minimax-") + ObjectiveName(objective_);
}

DefenseAllocation MinimaxDefender::Commit(const DefenderView& view) {
  if (!allocation_) {
    allocation_ =
        MinimaxProactiveDefense(RequireSystem(view), objective_, limit_)
            .allocation;
  }
  return *allocation_;
}

DefenseAllocation PerimeterDefender::Commit(const DefenderView& view) {
  if (!allocation_) {
    const System& system = RequireSystem(view);
    const std::optional<VertexId> target = system.FindVertex(target_);
    if (!target) {
      throw InvalidArgument("unknown perimeter target '" + target_ + "'");
    }
    allocation_ = MinCutPerimeterDefense(system, *target).allocation;
  }
  return *allocation_;
}

}  // namespace reactsec
