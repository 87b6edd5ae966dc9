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

// Shared fixtures for the unit tests.

#ifndef MECOFF_TESTS_TEST_UTIL_H_
#define MECOFF_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

#include "mecoff/energy_time.h"
#include "mecoff/rng.h"
#include "mecoff/task_model.h"

namespace mecoff::testing {

// A user with unit gain, g = 0, C = 1.
inline UserTask User(double l, double b, double y) {
  return UserTask{.local_bits = l,
                  .server_bits = b,
                  .cycles = 1.0,
                  .output_bits = y,
                  .energy_per_cycle = 0.0,
                  .gain = 1.0};
}

// Scenario drawn from the default distribution with `k` users.
inline Scenario RandomScenario(int k, std::uint64_t seed,
                               double mean_server_bits = 4.0,
                               double tau = 35.63) {
  ScenarioDistribution dist;
  dist.num_users = k;
  dist.mean_server_bits = mean_server_bits;
  SystemConfig config;
  config.tau = tau;
  Rng rng(seed);
  return SampleScenario(dist, config, rng);
}

// All 2^k decision vectors, in counting order.
inline std::vector<DecisionVector> AllDecisions(std::size_t k) {
  std::vector<DecisionVector> out;
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    std::vector<std::uint8_t> bits(k);
    for (std::size_t i = 0; i < k; ++i) bits[i] = (mask >> i) & 1u;
    out.emplace_back(std::move(bits));
  }
  return out;
}

inline double RelErr(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace mecoff::testing

#endif  // MECOFF_TESTS_TEST_UTIL_H_
