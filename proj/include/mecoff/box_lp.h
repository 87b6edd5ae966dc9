// Copyright 2026 The mecoff Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MECOFF_BOX_LP_H_
#define MECOFF_BOX_LP_H_

#include <span>
#include <vector>

namespace mecoff {

struct LpRow {
  std::vector<double> coeffs;
  double rhs = 0.0;
  bool equality = false;  // otherwise coeffs . x <= rhs
};

struct LpResult {
  bool feasible = false;
  double objective = 0.0;
  std::vector<double> x;
};

// Minimizes costs . x over the box 0 <= x <= 1 subject to a handful of dense
// rows. Two-phase tableau simplex with Bland's rule; meant for the tiny
// relaxations inside the branch and bound, not as a general LP solver.
LpResult SolveBoxLp(std::span<const double> costs, std::span<const LpRow> rows);

}  // namespace mecoff

#endif  // MECOFF_BOX_LP_H_
