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

#ifndef MECOFF_TASK_MODEL_H_
#define MECOFF_TASK_MODEL_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "mecoff/channel.h"
#include "mecoff/rng.h"

namespace mecoff {

// One user's task. Sizes are in bits/Hz.
struct UserTask {
  double local_bits = 0.0;   // L: uploaded when offloading
  double server_bits = 0.0;  // B: downloaded when computing locally
  double cycles = 0.0;       // C
  double output_bits = 0.0;  // Y: downloaded when offloading
  double energy_per_cycle = 0.0;  // g, local CPU
  double gain = 1.0;              // beta = |h|^2

  double aggregated_bits() const { return local_bits + server_bits; }

  bool operator==(const UserTask&) const = default;
};

// Output size as a function of the aggregated input, f(x) = c0 + c1 x.
struct OutputSizeMap {
  double constant = 0.0;  // c0
  double slope = 0.1;     // c1

  double operator()(double input_bits) const {
    return constant + slope * input_bits;
  }
  bool operator==(const OutputSizeMap&) const = default;
};

double OutputSize(double input_bits, const OutputSizeMap& map);

struct SystemConfig {
  RadioParams radio = RadioParams::FromSnr(1.0, 3.0, 6.0);
  FadingParams fading;
  double server_energy_per_cycle = 1.0;  // g0
  double tau = 35.63;                    // total transmission-time budget
  std::optional<double> cpu_cap;         // max server cycles; none = unbounded

  // Throws std::invalid_argument on tau <= 0, g0 < 0, or cpu_cap <= 0.
  void Validate() const;

  bool operator==(const SystemConfig&) const = default;
};

struct Scenario {
  SystemConfig config;
  std::vector<UserTask> users;

  std::size_t size() const { return users.size(); }

  // Throws std::invalid_argument naming the offending user and field. Gains
  // below the deep-fading threshold raise ExcludedUserError.
  void Validate() const;

  bool operator==(const Scenario&) const = default;
};

// Sampling law for Monte Carlo scenarios: L, B, C exponential with the given
// means, g uniform on [0, g_max], beta shifted exponential, Y = f(L + B).
struct ScenarioDistribution {
  int num_users = 10;
  double mean_local_bits = 2.0;
  double mean_server_bits = 4.0;
  double mean_cycles = 1.0;
  double max_energy_per_cycle = 10.0;
  OutputSizeMap output_map;
  FadingParams fading;

  void Validate() const;
};

// Draws users in index order; within a user the draw order is L, B, C, g,
// beta. Golden files depend on this order.
Scenario SampleScenario(const ScenarioDistribution& dist,
                        const SystemConfig& config, Rng& rng);

}  // namespace mecoff

#endif  // MECOFF_TASK_MODEL_H_
