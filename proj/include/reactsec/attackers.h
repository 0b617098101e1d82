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

#ifndef REACTSEC_ATTACKERS_H_
#define REACTSEC_ATTACKERS_H_

#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "reactsec/defense.h"
#include "reactsec/model.h"
#include "reactsec/paths.h"

namespace reactsec {

using Rng = std::mt19937_64;

struct BestResponseResult {
  Attack attack;
  double payoff = 0.0;
  double cost = 0.0;
  ExtendedReal roa = ExtendedReal::Undefined();
  // Set when the ROA objective found no path with positive payoff.
  bool roa_undefined = false;
};

// Best attack among `paths` given per-edge charges (see EdgeCharges).
//
// ROA ranking: zero-cost paths with positive payoff first (higher payoff
// wins), then finite ROA (higher wins, then cheaper, then lexicographically
// smaller edge-id sequence). Profit ranking: higher profit, then cheaper,
// then lexicographic.
BestResponseResult BestResponseAmong(std::span<const EnumeratedPath> paths,
                                     std::span<const double> charges,
                                     Objective objective);

BestResponseResult BestResponse(const System& system,
                                const DefenseAllocation& allocation,
                                Objective objective,
                                std::size_t limit = kDefaultEnumerationLimit);

// One single-edge attack drawn uniformly from a star of s-leaving edges.
// Throws InvalidArgument when some edge does not leave the start vertex.
Attack RandomParallelAttack(const System& system, Rng& rng);

// Edge usage distribution of a multi-attacker round: each attack contributes
// one count per edge it uses; counts are normalized to sum to one.
std::map<UnitId, double> AggregateMultiAttack(std::span<const Attack> attacks);

// An attacker sees the full system and the committed allocation and returns
// the round's attacks (one per attacker).
class Attacker {
 public:
  virtual ~Attacker() = default;
  virtual std::string Describe() const = 0;
  virtual std::vector<Attack> Choose(const System& system,
                                     const DefenseAllocation& allocation,
                                     std::size_t round, Rng& rng) = 0;
};

// Best responder, optionally blind to every edge outside `visible`.
class BestResponseAttacker : public Attacker {
 public:
  explicit BestResponseAttacker(
      Objective objective, std::optional<std::set<UnitId>> visible = {},
      std::size_t limit = kDefaultEnumerationLimit);

  std::string Describe() const override;
  std::vector<Attack> Choose(const System& system,
                             const DefenseAllocation& allocation,
                             std::size_t round, Rng& rng) override;

 private:
  const std::vector<EnumeratedPath>& PathsFor(const System& system);

  Objective objective_;
  std::optional<std::set<UnitId>> visible_;
  std::size_t limit_;
  const System* cached_for_ = nullptr;
  std::vector<EnumeratedPath> paths_;
};

// Uniform draw over all enumerated non-empty paths.
class UniformRandomPathAttacker : public Attacker {
 public:
  explicit UniformRandomPathAttacker(
      std::size_t limit = kDefaultEnumerationLimit)
      : limit_(limit) {}

  std::string Describe() const override { return "uniform-random-edge-path"; }
  std::vector<Attack> Choose(const System& system,
                             const DefenseAllocation& allocation,
                             std::size_t round, Rng& rng) override;

 private:
  std::size_t limit_;
  const System* cached_for_ = nullptr;
  std::vector<EnumeratedPath> paths_;
};

class RandomParallelAttacker : public Attacker {
 public:
  std::string Describe() const override { return "random-parallel"; }
  std::vector<Attack> Choose(const System& system,
                             const DefenseAllocation& allocation,
                             std::size_t round, Rng& rng) override;
};

// Replays a fixed list of attack rounds; round t uses entry (t-1) modulo the
// list length.
class FixedSequenceAttacker : public Attacker {
 public:
  explicit FixedSequenceAttacker(std::vector<std::vector<Attack>> rounds);
  static FixedSequenceAttacker FromAttacks(std::vector<Attack> attacks);

  std::string Describe() const override { return "fixed-sequence"; }
  std::vector<Attack> Choose(const System& system,
                             const DefenseAllocation& allocation,
                             std::size_t round, Rng& rng) override;

 private:
  std::vector<std::vector<Attack>> rounds_;
};

// Several uncoordinated attackers acting in the same round.
class MultiAttacker : public Attacker {
 public:
  explicit MultiAttacker(std::vector<std::unique_ptr<Attacker>> members);

  std::string Describe() const override;
  std::vector<Attack> Choose(const System& system,
                             const DefenseAllocation& allocation,
                             std::size_t round, Rng& rng) override;

 private:
  std::vector<std::unique_ptr<Attacker>> members_;
};

}  // namespace reactsec

#endif  // REACTSEC_ATTACKERS_H_
