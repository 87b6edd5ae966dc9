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

#include "mecoff/bilp.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

#include "mecoff/box_lp.h"
#include "mecoff/energy_time.h"

namespace mecoff {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kIntegralityTol = 1e-9;

// The LP bound carries a few ulps of round-off; a node is only discarded
// when its bound exceeds the incumbent by more than this.
double PruneMargin(double incumbent) {
  return 1e-9 * std::max(1.0, std::abs(incumbent));
}

bool WithinCap(double value, double cap) {
  return value <= cap + kFeasibilityTol;
}

struct Relaxation {
  double bound = kInf;
  std::vector<double> x;  // full length; fixed entries hold their value
  bool unique_completion = false;
};

// Sum of the `count` smallest entries of values[free].
double SmallestSum(std::span<const double> values,
                   const std::vector<int>& free_vars, int count) {
  std::vector<double> picked;
  picked.reserve(free_vars.size());
  for (int j : free_vars) picked.push_back(values[j]);
  std::partial_sort(picked.begin(), picked.begin() + count, picked.end());
  double sum = 0.0;
  for (int i = 0; i < count; ++i) sum += picked[i];
  return sum;
}

Relaxation Relax(const BilpInstance& inst, std::span<const Fixing> fixed) {
  const int k = static_cast<int>(inst.size());
  Relaxation out;
  out.x.assign(k, 0.0);

  std::vector<std::uint8_t> ones(k, 0);
  std::vector<int> free_vars;
  int num_ones = 0;
  for (int j = 0; j < k; ++j) {
    if (fixed[j] == Fixing::kFree) {
      free_vars.push_back(j);
    } else if (fixed[j] == Fixing::kOne) {
      ones[j] = 1;
      out.x[j] = 1.0;
      ++num_ones;
    }
  }
  const int remaining = inst.cardinality - num_ones;
  const int num_free = static_cast<int>(free_vars.size());
  if (remaining < 0 || remaining > num_free) return out;

  const double fixed_cost = SelectedSum(inst.costs, ones);
  const double budget_left = inst.budget - SelectedSum(inst.weights, ones);
  double cap_left = kInf;
  if (inst.extra) cap_left = inst.extra->cap - SelectedSum(inst.extra->weights, ones);

  // Cheapest possible completion in each constraint on its own.
  if (std::isfinite(budget_left) &&
      !WithinCap(SmallestSum(inst.weights, free_vars, remaining), budget_left)) {
    return out;
  }
  if (inst.extra &&
      !WithinCap(SmallestSum(inst.extra->weights, free_vars, remaining),
                 cap_left)) {
    return out;
  }

  if (remaining == 0 || remaining == num_free) {
    // Only one completion exists; evaluate it exactly.
    std::vector<std::uint8_t> a = ones;
    for (int j : free_vars) {
      a[j] = remaining == 0 ? 0 : 1;
      out.x[j] = a[j];
    }
    out.unique_completion = true;
    if (IsFeasible(inst, a)) out.bound = SelectedSum(inst.costs, a);
    return out;
  }

  std::vector<double> costs;
  costs.reserve(num_free);
  for (int j : free_vars) costs.push_back(inst.costs[j]);
  std::vector<LpRow> rows;
  rows.push_back({std::vector<double>(num_free, 1.0),
                  static_cast<double>(remaining), true});
  auto add_inequality = [&](std::span<const double> weights, double rhs) {
    LpRow row;
    row.rhs = rhs + kFeasibilityTol;
    for (int j : free_vars) row.coeffs.push_back(weights[j]);
    rows.push_back(std::move(row));
  };
  if (std::isfinite(budget_left)) add_inequality(inst.weights, budget_left);
  if (inst.extra) add_inequality(inst.extra->weights, cap_left);

  const LpResult lp = SolveBoxLp(costs, rows);
  if (!lp.feasible) return out;
  for (int i = 0; i < num_free; ++i) out.x[free_vars[i]] = lp.x[i];
  out.bound = fixed_cost + lp.objective;
  return out;
}

class BranchAndBound {
 public:
  explicit BranchAndBound(const BilpInstance& inst)
      : inst_(inst), fixed_(inst.size(), Fixing::kFree) {}

  BilpSolution Run() {
    Visit();
    BilpSolution sol;
    sol.nodes_explored = nodes_;
    if (best_) {
      sol.a = *best_;
      sol.objective = best_objective_;
      sol.status = SolveStatus::kOptimal;
    }
    return sol;
  }

 private:
  void Offer(std::vector<std::uint8_t> a) {
    const double obj = SelectedSum(inst_.costs, a);
    if (!best_ || obj < best_objective_ ||
        (obj == best_objective_ && a < *best_)) {
      best_ = std::move(a);
      best_objective_ = obj;
    }
  }

  void Visit() {
    ++nodes_;
    const Relaxation relax = Relax(inst_, fixed_);
    if (relax.bound == kInf) return;
    if (best_ && relax.bound > best_objective_ + PruneMargin(best_objective_)) {
      return;
    }
    if (relax.unique_completion) {
      std::vector<std::uint8_t> a(inst_.size());
      for (std::size_t j = 0; j < a.size(); ++j) a[j] = relax.x[j] > 0.5;
      Offer(std::move(a));
      return;
    }

    // An integral LP optimum is an incumbent candidate; the subtree is still
    // searched because an equal-cost, lexicographically smaller vector may
    // hide below.
    int branch_var = -1;
    bool integral = true;
    for (std::size_t j = 0; j < inst_.size(); ++j) {
      if (fixed_[j] != Fixing::kFree) continue;
      const double xj = relax.x[j];
      if (std::min(xj, 1.0 - xj) <= kIntegralityTol) continue;
      integral = false;
      if (branch_var < 0 ||
          std::abs(inst_.costs[j]) > std::abs(inst_.costs[branch_var])) {
        branch_var = static_cast<int>(j);
      }
    }
    if (integral) {
      std::vector<std::uint8_t> a(inst_.size());
      for (std::size_t j = 0; j < a.size(); ++j) a[j] = relax.x[j] > 0.5;
      if (IsFeasible(inst_, a)) Offer(std::move(a));
      for (std::size_t j = 0; j < inst_.size(); ++j) {
        if (fixed_[j] != Fixing::kFree) continue;
        if (branch_var < 0 ||
            std::abs(inst_.costs[j]) > std::abs(inst_.costs[branch_var])) {
          branch_var = static_cast<int>(j);
        }
      }
    }

    const Fixing first =
        relax.x[branch_var] >= 0.5 ? Fixing::kOne : Fixing::kZero;
    const Fixing second = first == Fixing::kOne ? Fixing::kZero : Fixing::kOne;
    fixed_[branch_var] = first;
    Visit();
    fixed_[branch_var] = second;
    Visit();
    fixed_[branch_var] = Fixing::kFree;
  }

  const BilpInstance& inst_;
  std::vector<Fixing> fixed_;
  std::optional<std::vector<std::uint8_t>> best_;
  double best_objective_ = kInf;
  std::int64_t nodes_ = 0;
};

}  // namespace

void BilpInstance::Validate() const {
  if (weights.size() != costs.size()) {
    throw std::invalid_argument(fmt::format(
        "BILP: {} costs but {} weights", costs.size(), weights.size()));
  }
  if (extra && extra->weights.size() != costs.size()) {
    throw std::invalid_argument(fmt::format(
        "BILP: {} costs but {} extra weights", costs.size(),
        extra->weights.size()));
  }
  if (cardinality < 0) {
    throw std::invalid_argument(
        fmt::format("BILP: negative cardinality {}", cardinality));
  }
}

bool IsFeasible(const BilpInstance& instance, std::span<const std::uint8_t> a) {
  if (a.size() != instance.size()) return false;
  int count = 0;
  for (std::uint8_t bit : a) count += bit;
  if (count != instance.cardinality) return false;
  if (!WithinCap(SelectedSum(instance.weights, a), instance.budget)) return false;
  if (instance.extra &&
      !WithinCap(SelectedSum(instance.extra->weights, a), instance.extra->cap)) {
    return false;
  }
  return true;
}

BilpSolution Solve(const BilpInstance& instance) {
  instance.Validate();
  if (instance.cardinality > static_cast<int>(instance.size())) return {};
  return BranchAndBound(instance).Run();
}

double RelaxationBound(const BilpInstance& instance,
                       std::span<const Fixing> fixed) {
  instance.Validate();
  if (fixed.size() != instance.size()) {
    throw std::invalid_argument("RelaxationBound: fixing length mismatch");
  }
  return Relax(instance, fixed).bound;
}

BilpSolution ExhaustiveSolve(const BilpInstance& instance) {
  instance.Validate();
  const int k = static_cast<int>(instance.size());
  if (k > kExhaustiveMaxSize) {
    throw std::invalid_argument(fmt::format(
        "exhaustive search limited to K <= {}, got {}", kExhaustiveMaxSize, k));
  }
  BilpSolution sol;
  const int n = instance.cardinality;
  if (n > k) return sol;

  // Ascending lexicographic order, so the first optimum found wins ties.
  std::vector<std::uint8_t> a(k, 0);
  std::fill(a.end() - n, a.end(), 1);
  do {
    ++sol.nodes_explored;
    if (!IsFeasible(instance, a)) continue;
    const double obj = SelectedSum(instance.costs, a);
    if (sol.status != SolveStatus::kOptimal || obj < sol.objective) {
      sol.a = a;
      sol.objective = obj;
      sol.status = SolveStatus::kOptimal;
    }
  } while (std::next_permutation(a.begin(), a.end()));
  return sol;
}

}  // namespace mecoff
