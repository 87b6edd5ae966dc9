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
#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "test_util.h"

namespace mecoff {
namespace {

using testing::AllDecisions;
using testing::RandomScenario;
using testing::RelErr;
using testing::User;

constexpr double kInf = std::numeric_limits<double>::infinity();

TEST(OptimizeTest, CheapLocalComputeStaysLocal) {
  Scenario s;
  s.users = {UserTask{.local_bits = 2, .server_bits = 0, .cycles = 1,
                      .output_bits = 0.2, .energy_per_cycle = 0.5,
                      .gain = 1}};
  s.config.tau = 10;
  const SolveOutcome out = Optimize(s);
  ASSERT_EQ(out.status, SolveStatus::kOptimal);
  EXPECT_EQ(out.decision, DecisionVector::Zeros(1));
  EXPECT_EQ(out.n_star, 0);
  EXPECT_DOUBLE_EQ(out.energy, 0.5);
  ASSERT_EQ(out.per_n.size(), 2u);
  EXPECT_NEAR(out.per_n[1].energy, 4.427448624529626, 1e-12);
}

TEST(OptimizeTest, ForcedCount) {
  Scenario s;
  s.users = {UserTask{.local_bits = 2, .server_bits = 0, .cycles = 1,
                      .output_bits = 0.2, .energy_per_cycle = 0.5,
                      .gain = 1}};
  const SolveOutcome out = Optimize(s, {.force_n = 1});
  ASSERT_EQ(out.status, SolveStatus::kOptimal);
  EXPECT_EQ(out.n_star, 1);
  EXPECT_NEAR(out.energy, 4.427448624529626, 1e-12);
}

TEST(OptimizeTest, BudgetBelowFloorIsInfeasible) {
  Scenario s;
  s.users = {User(1, 2, 2.5), User(1, 2, 3.0), User(2, 1, 1.5)};
  s.config.tau = 0.5;  // below sum B / v with every d_k >= 0
  const SolveOutcome out = Optimize(s);
  EXPECT_EQ(out.status, SolveStatus::kInfeasible);
  EXPECT_EQ(out.n_star, -1);
  EXPECT_EQ(out.energy, kInf);
  for (const PerCountResult& r : out.per_n) EXPECT_FALSE(r.feasible);
  ASSERT_TRUE(out.min_feasible_tau.has_value());
  const double floor = 5.0 / DownlinkRate(s.config.radio);
  EXPECT_NEAR(*out.min_feasible_tau, floor, 1e-12);
  EXPECT_NEAR(out.time, floor, 1e-12);
  s.config.tau = *out.min_feasible_tau;
  EXPECT_EQ(Optimize(s).status, SolveStatus::kOptimal);
}

// Property: outcome invariants on random scenarios.
TEST(OptimizeTest, SelfConsistency) {
  for (std::uint64_t seed = 1; seed <= 300; ++seed) {
    const Scenario s = RandomScenario(10, seed);
    const SolveOutcome out = Optimize(s);
    if (out.status != SolveStatus::kOptimal) continue;
    EXPECT_LE(out.time, s.config.tau + 1e-9);
    EXPECT_LT(RelErr(out.energy, TotalEnergy(s, out.decision)), 1e-9);
    EXPECT_EQ(out.time, TotalTime(s, out.decision));
    EXPECT_EQ(out.n_star, out.decision.count());
    ASSERT_EQ(out.per_n.size(), 11u);
    for (const PerCountResult& r : out.per_n) EXPECT_LE(out.energy, r.energy);
    EXPECT_GE(out.linearization_gap, -1e-12);
  }
}

// Property: the optimizer is exact for the linearized model and never beats
// the literal model.
TEST(OptimizeTest, AgreesWithBruteForce) {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const Scenario s = RandomScenario(10, seed);
    const SolveOutcome out = Optimize(s);
    const BruteForceResult lin = BruteForceOptimize(s, TimeModel::kLinearized);
    const BruteForceResult lit = BruteForceOptimize(s, TimeModel::kLiteral);
    ASSERT_EQ(out.status == SolveStatus::kOptimal, lin.feasible);
    if (!lin.feasible) continue;
    EXPECT_LT(RelErr(out.energy, lin.energy), 1e-9) << "seed " << seed;
    EXPECT_GE(out.energy, lit.energy - 1e-9);
    if (lit.decision.offloads(ArgmaxLocalBits(s))) {
      EXPECT_LT(RelErr(out.energy, lit.energy), 1e-9) << "seed " << seed;
    }
  }
}

TEST(OptimizeTest, LargerTauNeverCostsMore) {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    Scenario s = RandomScenario(10, seed);
    double last = kInf;
    bool was_feasible = false;
    for (double tau = 5.0; tau <= 60.0; tau += 2.5) {
      s.config.tau = tau;
      const SolveOutcome out = Optimize(s);
      const bool feasible = out.status == SolveStatus::kOptimal;
      EXPECT_TRUE(feasible || !was_feasible) << "seed " << seed;
      if (feasible) {
        EXPECT_LE(out.energy, last) << "seed " << seed << " tau " << tau;
        last = out.energy;
      }
      was_feasible = feasible;
    }
  }
}

TEST(OptimizeTest, NoServerDataNeverWorseThanAllLocal) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Scenario s = RandomScenario(8, seed);
    s.config.tau = 1.0;
    double local = 0.0;
    for (UserTask& u : s.users) {
      u.server_bits = 0.0;
      u.output_bits = 0.1 * u.local_bits;
      local += u.energy_per_cycle * u.cycles;
    }
    const SolveOutcome out = Optimize(s);
    ASSERT_EQ(out.status, SolveStatus::kOptimal);
    EXPECT_LE(out.energy, local + 1e-12);
  }
}

TEST(OptimizeTest, CpuCapHolds) {
  for (std::uint64_t seed = 1; seed <= 100; ++seed) {
    Scenario s = RandomScenario(10, seed);
    s.config.cpu_cap = 0.5 + 0.05 * static_cast<double>(seed % 40);
    const SolveOutcome out = Optimize(s);
    if (out.status != SolveStatus::kOptimal) continue;
    double cycles = 0.0;
    for (std::size_t k = 0; k < s.size(); ++k) {
      if (out.decision.offloads(k)) cycles += s.users[k].cycles;
    }
    EXPECT_LE(cycles, *s.config.cpu_cap + 1e-9);
    const Scenario uncapped = [&] {
      Scenario u = s;
      u.config.cpu_cap.reset();
      return u;
    }();
    EXPECT_GE(out.energy, Optimize(uncapped).energy - 1e-9);
  }
}

TEST(OptimizeTest, MaxOffloadersLimitsSearch) {
  const Scenario s = RandomScenario(10, 5, 8.0);
  const SolveOutcome out = Optimize(s, {.max_offloaders = 1});
  EXPECT_EQ(out.per_n.size(), 2u);
  if (out.status == SolveStatus::kOptimal) EXPECT_LE(out.n_star, 1);
}

TEST(MinFeasibleTauTest, NoServerDataIsZero) {
  Scenario s;
  s.users = {User(1, 0, 0.1), User(3, 0, 0.3)};
  EXPECT_EQ(MinFeasibleTau(s), 0.0);
}

TEST(MinFeasibleTauTest, TwoUsersMatchEnumeration) {
  Scenario s;
  s.users = {User(2, 4, 0.6), User(4, 12, 1.0)};
  double best = kInf;
  for (const DecisionVector& a : AllDecisions(2)) {
    best = std::min(best, a.count() == 0 ? TotalTime(s, a)
                                         : LinearizedTime(s, a));
  }
  EXPECT_NEAR(MinFeasibleTau(s), best, 1e-12);
  // Offloading only the larger-L user, literal and linearized agree.
  EXPECT_NEAR(best, TotalTime(s, DecisionVector({0, 1})), 1e-12);
}

TEST(MinFeasibleTauTest, AddingUserNeverDecreases) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const Scenario full = RandomScenario(6, seed);
    Scenario s = full;
    s.users.clear();
    double last = 0.0;
    for (const UserTask& u : full.users) {
      s.users.push_back(u);
      const double t = MinFeasibleTau(s);
      EXPECT_GE(t, last - 1e-12) << "seed " << seed;
      last = t;
    }
  }
}

TEST(MinFeasibleTauTest, ThresholdOfFeasibility) {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    Scenario s = RandomScenario(10, seed, 8.0);
    const double t = MinFeasibleTau(s);
    s.config.tau = t;
    EXPECT_EQ(Optimize(s).status, SolveStatus::kOptimal) << "seed " << seed;
    s.config.tau = t * (1 - 1e-6) - 1e-6;
    if (s.config.tau > 0) {
      EXPECT_EQ(Optimize(s).status, SolveStatus::kInfeasible)
          << "seed " << seed;
    }
  }
}

TEST(ArgmaxLocalBitsTest, FirstOfTies) {
  Scenario s;
  s.users = {User(1, 0, 0), User(3, 0, 0), User(3, 0, 0)};
  EXPECT_EQ(ArgmaxLocalBits(s), 1u);
}

}  // namespace
}  // namespace mecoff
