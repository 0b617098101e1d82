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

#ifndef REACTSEC_POLICIES_H_
#define REACTSEC_POLICIES_H_

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "reactsec/attackers.h"
#include "reactsec/defenders.h"
#include "reactsec/io.h"

namespace reactsec::io {

// Defender names: reactive-hidden, reactive-known, myopic, uniform,
// minimax-roa, minimax-profit, mincut:<target vertex>. The known-edge
// defender falls back to `rounds` as its horizon.
std::unique_ptr<Defender> MakeDefender(const DefenderConfig& config,
                                       std::size_t rounds);

// Attacker names: roa-best-response, profit-best-response,
// uniform-random-edge-path, random-parallel, fixed-sequence:<trace.csv>,
// and multi:<name>+<name>+... A visible edge list turns a best responder
// into an oblivious one; the policy name oblivious-subgraph is shorthand for
// roa-best-response with a required visible list.
std::unique_ptr<Attacker> MakeAttacker(const AttackerConfig& config,
                                       const System& system);

std::vector<std::string> DefenderNames();
std::vector<std::string> AttackerNames();

}  // namespace reactsec::io

#endif  // REACTSEC_POLICIES_H_
