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

// Random instance generators and brute-force oracles shared by the tests.
// The oracles deliberately avoid the library's own search and solver code.

#ifndef REACTSEC_TESTS_TEST_UTIL_H_
#define REACTSEC_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "reactsec/model.h"

namespace reactsec::testing {

using Rng = std::mt19937_64;

struct GraphOptions {
  std::size_t min_vertices = 3;
  std::size_t max_vertices = 7;
  std::size_t min_edges = 2;
  std::size_t max_edges = 10;
  double min_surface = 1.0;
  double max_surface = 10.0;
  bool integer_surfaces = false;
  double max_reward = 10.0;
  // Edges only go from lower to higher vertex index.
  bool acyclic = true;
  double budget = 1.0;
};

inline double Uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline std::size_t Index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// Vertex v0 is the start. The first edge always leaves it.
inline SystemSpec RandomSpec(Rng& rng, const GraphOptions& o = {}) {
  SystemSpec spec;
  const std::size_t n = Index(rng, o.min_vertices, o.max_vertices);
  for (std::size_t i = 0; i < n; ++i) {
    spec.vertices.push_back(
        {"v" + std::to_string(i), i == 0 ? 0.0 : Uniform(rng, 0.0, o.max_reward)});
  }
  spec.start = "v0";
  spec.budget = o.budget;
  const std::size_t m = Index(rng, o.min_edges, o.max_edges);
  for (std::size_t k = 0; k < m; ++k) {
    std::size_t u = 0;
    std::size_t v = 0;
    if (k == 0) {
      v = Index(rng, 1, n - 1);
    } else if (o.acyclic) {
      u = Index(rng, 0, n - 2);
      v = Index(rng, u + 1, n - 1);
    } else {
      do {
        u = Index(rng, 0, n - 1);
        v = Index(rng, 0, n - 1);
      } while (u == v);
    }
    const double w = o.integer_surfaces
                         ? static_cast<double>(Index(
                               rng, static_cast<std::size_t>(o.min_surface),
                               static_cast<std::size_t>(o.max_surface)))
                         : Uniform(rng, o.min_surface, o.max_surface);
    spec.edges.push_back({"e" + std::to_string(k), spec.vertices[u].id,
                          spec.vertices[v].id, w});
  }
  return spec;
}

inline System RandomSystem(Rng& rng, const GraphOptions& o = {}) {
  return System::Build(RandomSpec(rng, o));
}

// Every non-empty edge-simple path from the start vertex, found by extending
// partial paths with any unused edge whose tail matches.
inline std::vector<Attack> AllPaths(const System& system) {
  std::vector<Attack> out;
  std::vector<UnitId> path;
  std::vector<bool> used(system.num_edges(), false);
  std::function<void(VertexId)> extend = [&](VertexId at) {
    for (const System::Edge& e : system.edges()) {
      if (used[e.id.value] || e.from != at) continue;
      used[e.id.value] = true;
      path.push_back(e.id);
      out.push_back(Attack{path});
      extend(e.to);
      path.pop_back();
      used[e.id.value] = false;
    }
  };
  extend(system.start());
  return out;
}

// Reward sum over distinct visited vertices, computed from the spec.
inline double BrutePayoff(const System& system, const Attack& a) {
  std::set<std::uint32_t> seen;
  double total = 0.0;
  for (UnitId id : a.path) {
    for (VertexId v : {system.edge(id).from, system.edge(id).to}) {
      if (seen.insert(v.value).second) total += system.spec().vertices[v.value].reward;
    }
  }
  return total;
}

inline double BruteCost(const System& system, const Attack& a,
                        const std::vector<double>& d) {
  double total = 0.0;
  for (UnitId id : a.path) total += d[id.value] / system.surface(id);
  return total;
}

// Minimum s-t cut weight over all vertex bipartitions with s on the source
// side and t on the sink side.
inline double BruteMinCut(const System& system, VertexId t) {
  const std::size_t n = system.num_vertices();
  const std::uint32_t s = system.start().value;
  double best = std::numeric_limits<double>::infinity();
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    if (!((mask >> s) & 1u) || ((mask >> t.value) & 1u)) continue;
    double weight = 0.0;
    for (const System::Edge& e : system.edges()) {
      if (((mask >> e.from.value) & 1u) && !((mask >> e.to.value) & 1u)) {
        weight += e.surface;
      }
    }
    best = std::min(best, weight);
  }
  return best;
}

// Vertices reachable from the start.
inline std::set<std::uint32_t> Reachable(const System& system) {
  std::set<std::uint32_t> seen{system.start().value};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const System::Edge& e : system.edges()) {
      if (seen.contains(e.from.value) && seen.insert(e.to.value).second) {
        grew = true;
      }
    }
  }
  return seen;
}

// Calls f(d) for every split of the budget into `units` nonnegative multiples
// of budget/steps that sums to the budget.
inline void ForEachGridAllocation(
    std::size_t units, std::size_t steps, double budget,
    const std::function<void(const std::vector<double>&)>& f) {
  std::vector<std::size_t> parts(units, 0);
  std::vector<double> d(units, 0.0);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t i,
                                                          std::size_t left) {
    if (i + 1 == units) {
      parts[i] = left;
      for (std::size_t k = 0; k < units; ++k) {
        d[k] = budget * static_cast<double>(parts[k]) /
               static_cast<double>(steps);
      }
      f(d);
      return;
    }
    for (std::size_t p = 0; p <= left; ++p) {
      parts[i] = p;
      rec(i + 1, left - p);
    }
  };
  rec(0, steps);
}

// max over grid allocations of min over paths of cost.
inline double GridMaximinCost(const System& system, std::size_t steps) {
  const std::vector<Attack> paths = AllPaths(system);
  double best = -1.0;
  ForEachGridAllocation(system.num_edges(), steps, system.budget(),
                        [&](const std::vector<double>& d) {
                          double worst = std::numeric_limits<double>::infinity();
                          for (const Attack& a : paths) {
                            worst = std::min(worst, BruteCost(system, a, d));
                            if (worst <= best) return;
                          }
                          best = std::max(best, worst);
                        });
  return best;
}

// max over grid allocations of total cost over the attack sequence.
inline double GridHindsightCost(const System& system,
                                const std::vector<Attack>& attacks,
                                std::size_t steps) {
  double best = -1.0;
  ForEachGridAllocation(system.num_edges(), steps, system.budget(),
                        [&](const std::vector<double>& d) {
                          double total = 0.0;
                          for (const Attack& a : attacks) {
                            total += BruteCost(system, a, d);
                          }
                          best = std::max(best, total);
                        });
  return best;
}

inline std::vector<double> Dense(const System& system,
                                 const DefenseAllocation& d) {
  std::vector<double> out(system.num_edges(), 0.0);
  for (const auto& [id, amount] : d.amounts()) out[id.value] = amount;
  return out;
}

inline Attack RandomPath(const std::vector<Attack>& paths, Rng& rng) {
  return paths[Index(rng, 0, paths.size() - 1)];
}

inline bool RelClose(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace reactsec::testing

#endif  // REACTSEC_TESTS_TEST_UTIL_H_
