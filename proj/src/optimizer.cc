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

#include "mecoff/optimizer.h"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

namespace mecoff {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> CycleWeights(const Scenario& scenario) {
  std::vector<double> w;
  w.reserve(scenario.size());
  for (const UserTask& u : scenario.users) w.push_back(u.cycles);
  return w;
}

bool WithinCpuCap(const Scenario& scenario, const DecisionVector& a) {
  if (!scenario.config.cpu_cap) return true;
  return SelectedSum(CycleWeights(scenario), a.bits()) <=
         *scenario.config.cpu_cap + kFeasibilityTol;
}

BilpInstance MakeInstance(const Scenario& scenario,
                          const LinearCoefficients& lc, double budget) {
  BilpInstance inst;
  inst.costs = lc.energy_coeffs;
  inst.weights = lc.time_coeffs;
  inst.budget = budget;
  inst.cardinality = lc.n;
  if (scenario.config.cpu_cap) {
    inst.extra = ExtraConstraint{CycleWeights(scenario), *scenario.config.cpu_cap};
  }
  return inst;
}

struct TimeFloor {
  double tau = kInf;
  DecisionVector decision;
};

// Smallest optimizer-model time over offloader counts in [lo, hi].
TimeFloor MinTime(const Scenario& scenario, int lo, int hi) {
  const int k = static_cast<int>(scenario.size());
  TimeFloor best;
  for (int n = lo; n <= hi; ++n) {
    DecisionVector a;
    double t = kInf;
    if (n == 0 || n == k) {
      a = n == 0 ? DecisionVector::Zeros(k) : DecisionVector::Ones(k);
      if (!WithinCpuCap(scenario, a)) continue;
      t = TotalTime(scenario, a);
    } else {
      const LinearCoefficients lc = Linearize(scenario, n);
      BilpInstance inst = MakeInstance(scenario, lc, kInf);
      inst.costs = lc.time_coeffs;
      const BilpSolution sol = Solve(inst);
      if (sol.status != SolveStatus::kOptimal) continue;
      a = DecisionVector(sol.a);
      t = lc.base_time + sol.objective;
    }
    if (t < best.tau) best = {t, std::move(a)};
  }
  return best;
}

}  // namespace

std::size_t ArgmaxLocalBits(const Scenario& scenario) {
  const auto it = std::max_element(
      scenario.users.begin(), scenario.users.end(),
      [](const UserTask& x, const UserTask& y) {
        return x.local_bits < y.local_bits;
      });
  return static_cast<std::size_t>(it - scenario.users.begin());
}

SolveOutcome Optimize(const Scenario& scenario, const OptimizeOptions& options) {
  scenario.Validate();
  const int k = static_cast<int>(scenario.size());
  const double tau = scenario.config.tau;

  int lo = 0;
  int hi = k;
  if (options.max_offloaders) hi = std::clamp(*options.max_offloaders, 0, k);
  if (options.force_n) {
    if (*options.force_n < 0 || *options.force_n > k) {
      throw std::invalid_argument(fmt::format(
          "forced offloader count {} outside [0, {}]", *options.force_n, k));
    }
    lo = hi = *options.force_n;
  }

  SolveOutcome out;
  double best_energy = kInf;
  for (int n = lo; n <= hi; ++n) {
    PerCountResult entry{.n = n, .energy = kInf};
    DecisionVector candidate;
    if (n == 0 || n == k) {
      candidate = n == 0 ? DecisionVector::Zeros(k) : DecisionVector::Ones(k);
      const CostBreakdown cost = Evaluate(scenario, candidate);
      entry.feasible = cost.total_time <= tau + kFeasibilityTol &&
                       WithinCpuCap(scenario, candidate);
      if (entry.feasible) entry.energy = cost.total_energy;
    } else {
      const LinearCoefficients lc = Linearize(scenario, n);
      const BilpSolution sol =
          Solve(MakeInstance(scenario, lc, tau - lc.base_time));
      entry.nodes_explored = sol.nodes_explored;
      entry.feasible = sol.status == SolveStatus::kOptimal;
      if (entry.feasible) {
        entry.energy = lc.base_energy + sol.objective;
        candidate = DecisionVector(sol.a);
      }
    }
    out.per_n.push_back(entry);
    if (entry.feasible && entry.energy < best_energy) {
      best_energy = entry.energy;
      out.decision = std::move(candidate);
      out.n_star = n;
    }
  }

  if (out.n_star < 0) {
    TimeFloor floor = MinTime(scenario, lo, hi);
    out.status = SolveStatus::kInfeasible;
    out.energy = kInf;
    out.min_feasible_tau = floor.tau;
    if (floor.decision.size() == static_cast<std::size_t>(k)) {
      out.decision = std::move(floor.decision);
      out.breakdown = Evaluate(scenario, out.decision);
      out.time = out.breakdown.total_time;
    } else {
      out.decision = DecisionVector::Zeros(k);
      out.breakdown = Evaluate(scenario, out.decision);
      out.time = kInf;
    }
    return out;
  }

  out.status = SolveStatus::kOptimal;
  out.energy = best_energy;
  out.breakdown = Evaluate(scenario, out.decision);
  out.time = out.breakdown.total_time;
  out.linearization_gap = LinearizedTime(scenario, out.decision) - out.time;
  if (out.time > tau + kFeasibilityTol) {
    throw std::logic_error(fmt::format(
        "optimizer returned a decision with time {} above tau {}", out.time,
        tau));
  }
  return out;
}

double MinFeasibleTau(const Scenario& scenario) {
  scenario.Validate();
  return MinTime(scenario, 0, static_cast<int>(scenario.size())).tau;
}

BruteForceResult BruteForceOptimize(const Scenario& scenario, TimeModel model) {
  scenario.Validate();
  const int k = static_cast<int>(scenario.size());
  if (k > 20) {
    throw std::invalid_argument(
        fmt::format("brute force limited to K <= 20, got {}", k));
  }
  std::vector<std::optional<LinearCoefficients>> lcs(k + 1);
  for (int n = 1; n <= k; ++n) lcs[n] = Linearize(scenario, n);

  BruteForceResult best;
  std::vector<std::uint8_t> bits(k);
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    for (int j = 0; j < k; ++j) bits[j] = (mask >> j) & 1u;
    const DecisionVector a(bits);
    if (!WithinCpuCap(scenario, a)) continue;
    const CostBreakdown cost = Evaluate(scenario, a);
    double t = cost.total_time;
    if (model == TimeModel::kLinearized && a.count() > 0) {
      const LinearCoefficients& lc = *lcs[a.count()];
      t = lc.base_time + SelectedSum(lc.time_coeffs, a.bits());
    }
    if (t > scenario.config.tau + kFeasibilityTol) continue;
    if (!best.feasible || cost.total_energy < best.energy) {
      best = {true, a, cost.total_energy};
    }
  }
  return best;
}

}  // namespace mecoff
