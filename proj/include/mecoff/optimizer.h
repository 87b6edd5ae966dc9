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

#ifndef MECOFF_OPTIMIZER_H_
#define MECOFF_OPTIMIZER_H_

#include <optional>
#include <vector>

#include "mecoff/bilp.h"
#include "mecoff/energy_time.h"
#include "mecoff/task_model.h"

namespace mecoff {

struct PerCountResult {
  int n = 0;
  double energy = 0.0;  // minimum total energy with n offloaders, or +inf
  bool feasible = false;
  std::int64_t nodes_explored = 0;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::kInfeasible;
  // When infeasible: the decision with the smallest achievable time, n_star
  // = -1 and energy = +inf.
  DecisionVector decision;
  int n_star = -1;
  double energy = 0.0;
  double time = 0.0;  // literal total time of `decision`
  CostBreakdown breakdown;
  std::vector<PerCountResult> per_n;
  // Linearized minus literal total time of the decision; zero when the
  // offloading set holds a user with the largest L.
  double linearization_gap = 0.0;
  // Smallest tau for which Optimize() succeeds. Filled only when infeasible.
  std::optional<double> min_feasible_tau;
};

struct OptimizeOptions {
  // Only consider offloader counts n <= max_offloaders (e.g. the mean-level
  // bound from MaxOffloadingUsers).
  std::optional<int> max_offloaders;
  // Only consider exactly this many offloaders.
  std::optional<int> force_n;
};

// Minimizes total energy subject to total time <= tau by solving one
// cardinality-constrained BILP per offloader count n in 1..K-1, evaluating
// n = 0 and n = K directly, and keeping the cheapest. Ties across n go to the
// smaller n. The time constraint in each BILP uses the all-users L_max, so
// the returned decision always satisfies the literal time model.
SolveOutcome Optimize(const Scenario& scenario,
                      const OptimizeOptions& options = {});

// Smallest tau for which Optimize() would report an optimum (same time model
// and CPU cap as Optimize).
double MinFeasibleTau(const Scenario& scenario);

// Reference: minimum total energy over all 2^K decisions, under either time
// model. Intended for K <= 20.
enum class TimeModel { kLiteral, kLinearized };
struct BruteForceResult {
  bool feasible = false;
  DecisionVector decision;
  double energy = 0.0;
};
BruteForceResult BruteForceOptimize(const Scenario& scenario, TimeModel model);

// Index of the first user with the largest local data size.
std::size_t ArgmaxLocalBits(const Scenario& scenario);

}  // namespace mecoff

#endif  // MECOFF_OPTIMIZER_H_
