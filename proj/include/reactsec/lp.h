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

#ifndef REACTSEC_LP_H_
#define REACTSEC_LP_H_

#include <vector>

namespace reactsec::lp {

// maximize c'x subject to A x <= b, x >= 0.
struct Problem {
  std::vector<std::vector<double>> a;
  std::vector<double> b;
  std::vector<double> c;
};

enum class Status { kOptimal, kInfeasible, kUnbounded };

struct Solution {
  Status status = Status::kInfeasible;
  double objective = 0.0;
  std::vector<double> x;
};

// Dense two-phase simplex with Bland's pivoting rule. Intended for the small
// programs that come out of path enumeration (tens of variables, up to a few
// thousand constraints).
Solution Maximize(const Problem& problem);

}  // namespace reactsec::lp

#endif  // REACTSEC_LP_H_
