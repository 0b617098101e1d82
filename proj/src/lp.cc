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

#include "reactsec/lp.h"

#include <cmath>
#include <limits>
#include <utility>

#include "reactsec/errors.h"

namespace reactsec::lp {
namespace {

constexpr double kEps = 1e-10;
constexpr long kMaxPivots = 1'000'000;

// Tableau layout follows the classic "KACTL" formulation: rows 0..m-1 hold
// constraints, row m the objective, row m+1 the phase-one objective. Column n
// is the artificial variable and column n+1 the right-hand side.
class Tableau {
 public:
  explicit Tableau(const Problem& p)
      : m_(static_cast<int>(p.b.size())),
        n_(static_cast<int>(p.c.size())),
        nonbasic_(n_ + 1),
        basic_(m_),
        d_(m_ + 2, std::vector<double>(n_ + 2, 0.0)) {
    for (int i = 0; i < m_; ++i) {
      for (int j = 0; j < n_; ++j) d_[i][j] = p.a[i][j];
      basic_[i] = n_ + i;
      d_[i][n_] = -1.0;
      d_[i][n_ + 1] = p.b[i];
    }
    for (int j = 0; j < n_; ++j) {
      nonbasic_[j] = j;
      d_[m_][j] = -p.c[j];
    }
    nonbasic_[n_] = -1;
    d_[m_ + 1][n_] = 1.0;
  }

  Solution Solve() {
    Solution out;
    int r = 0;
    for (int i = 1; i < m_; ++i) {
      if (d_[i][n_ + 1] < d_[r][n_ + 1]) r = i;
    }
    if (m_ > 0 && d_[r][n_ + 1] < -kEps) {
      Pivot(r, n_);
      if (!Run(2) || d_[m_ + 1][n_ + 1] < -kEps) {
        out.status = Status::kInfeasible;
        return out;
      }
      for (int i = 0; i < m_; ++i) {
        if (basic_[i] != -1) continue;
        int s = -1;
        for (int j = 0; j <= n_; ++j) {
          if (s == -1 || std::abs(d_[i][j]) > std::abs(d_[i][s])) s = j;
        }
        Pivot(i, s);
      }
    }
    const bool bounded = Run(1);
    out.x.assign(n_, 0.0);
    for (int i = 0; i < m_; ++i) {
      if (basic_[i] >= 0 && basic_[i] < n_) out.x[basic_[i]] = d_[i][n_ + 1];
    }
    out.status = bounded ? Status::kOptimal : Status::kUnbounded;
    out.objective = bounded ? d_[m_][n_ + 1]
                            : std::numeric_limits<double>::infinity();
    return out;
  }

 private:
  void Pivot(int r, int s) {
    const double inv = 1.0 / d_[r][s];
    for (int i = 0; i < m_ + 2; ++i) {
      if (i == r || std::abs(d_[i][s]) <= kEps) continue;
      const double f = d_[i][s] * inv;
      for (int j = 0; j < n_ + 2; ++j) d_[i][j] -= d_[r][j] * f;
      d_[i][s] = d_[r][s] * f;
    }
    for (int j = 0; j < n_ + 2; ++j) {
      if (j != s) d_[r][j] *= inv;
    }
    for (int i = 0; i < m_ + 2; ++i) {
      if (i != r) d_[i][s] *= -inv;
    }
    d_[r][s] = inv;
    std::swap(basic_[r], nonbasic_[s]);
  }

  // Bland's rule: lowest-index improving column, lowest-index tied row.
  bool Run(int phase) {
    const int x = m_ + phase - 1;
    for (long iter = 0; iter < kMaxPivots; ++iter) {
      int s = -1;
      for (int j = 0; j <= n_; ++j) {
        if (nonbasic_[j] == -phase) continue;
        if (d_[x][j] < -kEps && (s == -1 || nonbasic_[j] < nonbasic_[s])) {
          s = j;
        }
      }
      if (s == -1) return true;
      int r = -1;
      for (int i = 0; i < m_; ++i) {
        if (d_[i][s] <= kEps) continue;
        if (r == -1) {
          r = i;
          continue;
        }
        const double lhs = d_[i][n_ + 1] / d_[i][s];
        const double rhs = d_[r][n_ + 1] / d_[r][s];
        if (lhs < rhs - kEps ||
            (std::abs(lhs - rhs) <= kEps && basic_[i] < basic_[r])) {
          r = i;
        }
      }
      if (r == -1) return false;
      Pivot(r, s);
    }
    throw Error("E-LP", "simplex did not converge");
  }

  int m_;
  int n_;
  std::vector<int> nonbasic_;
  std::vector<int> basic_;
  std::vector<std::vector<double>> d_;
};

}  // namespace

Solution Maximize(const Problem& problem) {
  if (problem.a.size() != problem.b.size()) {
    throw InvalidArgument("LP row count does not match right-hand side");
  }
  for (const auto& row : problem.a) {
    if (row.size() != problem.c.size()) {
      throw InvalidArgument("LP row width does not match objective");
    }
  }
  return Tableau(problem).Solve();
}

}  // namespace reactsec::lp
