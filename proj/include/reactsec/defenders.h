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

#ifndef REACTSEC_DEFENDERS_H_
#define REACTSEC_DEFENDERS_H_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "reactsec/defense.h"
#include "reactsec/model.h"
#include "reactsec/view.h"

namespace reactsec {

enum class Knowledge {
  // Sees only edges used in earlier attacks (through a MaskedView).
  kRevealedOnly,
  // Sees the complete system, rewards included.
  kFullSystem,
};

// Input to Defender::Commit for round `round`. `system` is null unless the
// defender declared Knowledge::kFullSystem.
struct DefenderView {
  std::size_t round;
  const MaskedView& revealed;
  const System* system;
};

// What the defender learns after a round.
struct Observation {
  std::size_t round = 0;
  std::vector<Attack> attacks;
  // Surfaces of every edge used this round.
  std::map<UnitId, double> surfaces;
  // Edge usage distribution; filled when the round had several attackers.
  std::map<UnitId, double> distribution;

  bool multi() const { return attacks.size() > 1; }
};

class Defender {
 public:
  virtual ~Defender() = default;
  virtual std::string Describe() const = 0;
  virtual Knowledge knowledge() const = 0;
  // Allocation for the round about to be played. Never sees that round's
  // attack.
  virtual DefenseAllocation Commit(const DefenderView& view) = 0;
  virtual void Observe(const Observation& observation) = 0;
  // Learning rate behind the most recent commitment, if the policy has one.
  virtual std::optional<double> beta() const { return std::nullopt; }
};

// Multiplicative-weights defender over revealed edges (see
// ReactiveHiddenState).
class ReactiveHiddenDefender : public Defender {
 public:
  explicit ReactiveHiddenDefender(std::optional<double> fixed_beta = {})
      : fixed_beta_(fixed_beta) {}

  std::string Describe() const override;
  Knowledge knowledge() const override { return Knowledge::kRevealedOnly; }
  DefenseAllocation Commit(const DefenderView& view) override;
  void Observe(const Observation& observation) override;
  std::optional<double> beta() const override;

  const ReactiveHiddenState* state() const {
    return state_ ? &*state_ : nullptr;
  }

 private:
  std::optional<double> fixed_beta_;
  std::optional<ReactiveHiddenState> state_;
};

// Multiplicative weights over all edges, known up front. Beta comes from
// `horizon` unless given explicitly.
class ReactiveKnownDefender : public Defender {
 public:
  ReactiveKnownDefender(std::optional<std::size_t> horizon,
                        std::optional<double> beta);

  std::string Describe() const override;
  Knowledge knowledge() const override { return Knowledge::kFullSystem; }
  DefenseAllocation Commit(const DefenderView& view) override;
  void Observe(const Observation& observation) override;
  std::optional<double> beta() const override;

 private:
  std::optional<std::size_t> horizon_;
  std::optional<double> beta_;
  std::optional<ReactiveKnownState> state_;
};

// Moves the whole budget onto the previous round's attack.
class MyopicDefender : public Defender {
 public:
  std::string Describe() const override { return "myopic"; }
  Knowledge knowledge() const override { return Knowledge::kRevealedOnly; }
  DefenseAllocation Commit(const DefenderView& view) override;
  void Observe(const Observation& observation) override;

 private:
  std::vector<UnitId> last_;
  std::map<UnitId, double> surfaces_;
};

// Commits the same allocation every round.
class FixedDefender : public Defender {
 public:
  FixedDefender(std::string name, DefenseAllocation allocation)
      : name_(std::move(name)), allocation_(std::move(allocation)) {}

  std::string Describe() const override { return name_; }
  Knowledge knowledge() const override { return Knowledge::kFullSystem; }
  DefenseAllocation Commit(const DefenderView& view) override;
  void Observe(const Observation&) override {}

 private:
  std::string name_;
  DefenseAllocation allocation_;
};

class UniformDefender : public Defender {
 public:
  std::string Describe() const override { return "uniform"; }
  Knowledge knowledge() const override { return Knowledge::kFullSystem; }
  DefenseAllocation Commit(const DefenderView& view) override;
  void Observe(const Observation&) override {}
};

// Rational proactive defender; solved once on first use.
class MinimaxDefender : public Defender {
 public:
  explicit MinimaxDefender(Objective objective,
                           std::size_t limit = kDefaultEnumerationLimit)
      : objective_(objective), limit_(limit) {}

  std::string Describe() const override;
  Knowledge knowledge() const override { return Knowledge::kFullSystem; }
  DefenseAllocation Commit(const DefenderView& view) override;
  void Observe(const Observation&) override {}

 private:
  Objective objective_;
  std::size_t limit_;
  std::optional<DefenseAllocation> allocation_;
};

class PerimeterDefender : public Defender {
 public:
  explicit PerimeterDefender(std::string target) : target_(std::move(target)) {}

  std::string Describe() const override { return "mincut(" + target_ + ")"; }
  Knowledge knowledge() const override { return Knowledge::kFullSystem; }
  DefenseAllocation Commit(const DefenderView& view) override;
  void Observe(const Observation&) override {}

 private:
  std::string target_;
  std::optional<DefenseAllocation> allocation_;
};

}  // namespace reactsec

#endif  // REACTSEC_DEFENDERS_H_
