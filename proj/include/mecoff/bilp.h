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

// Cardinality-constrained binary integer linear program:
//
//   minimize    e . a
//   subject to  d . a <= budget
//               w . a <= cap        (optional)
//               1 . a  = n
//               a in {0,1}^K
//
// d and e may have any sign. Solve() is a depth-first branch and bound over
// an exact LP relaxation; ExhaustiveSolve() enumerates every size-n subset
// and is kept as the reference oracle.
//
// Ties in the objective are broken towards the lexicographically smallest a
// (a_0 first, 0 < 1), so both solvers return the same vector.

#ifndef MECOFF_BILP_H_
#define MECOFF_BILP_H_

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace mecoff {

// Absolute slack allowed on every inequality.
inline constexpr double kFeasibilityTol = 1e-9;

struct ExtraConstraint {
  std::vector<double> weights;
  double cap = 0.0;
};

struct BilpInstance {
  std::vector<double> costs;    // e
  std::vector<double> weights;  // d
  double budget = 0.0;          // may be +inf (constraint absent)
  int cardinality = 0;          // n
  std::optional<ExtraConstraint> extra;

  std::size_t size() const { return costs.size(); }
  // Throws std::invalid_argument on length mismatches or a negative n.
  void Validate() const;
};

enum class SolveStatus { kOptimal, kInfeasible };

struct BilpSolution {
  std::vector<std::uint8_t> a;
  double objective = 0.0;
  SolveStatus status = SolveStatus::kInfeasible;
  std::int64_t nodes_explored = 0;
};

// Whether a satisfies every constraint of the instance, with kFeasibilityTol
// slack on the inequalities.
bool IsFeasible(const BilpInstance& instance, std::span<const std::uint8_t> a);

BilpSolution Solve(const BilpInstance& instance);

// Per-variable state for RelaxationBound.
enum class Fixing : std::int8_t { kFree = -1, kZero = 0, kOne = 1 };

// Lower bound on the objective of the instance restricted by `fixed`, from
// the continuous relaxation over the free variables. +inf when the
// relaxation is infeasible. With no free variables it is the exact objective
// of the fixed assignment (or +inf if that assignment is infeasible).
double RelaxationBound(const BilpInstance& instance,
                       std::span<const Fixing> fixed);

inline constexpr int kExhaustiveMaxSize = 25;

// Enumerates all C(K, n) subsets. Throws std::invalid_argument when
// K > kExhaustiveMaxSize.
BilpSolution ExhaustiveSolve(const BilpInstance& instance);

}  // namespace mecoff

#endif  // MECOFF_BILP_H_
