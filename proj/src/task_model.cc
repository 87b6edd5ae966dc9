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

#include "mecoff/task_model.h"

#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace mecoff {

namespace {

void RequireNonNegative(double value, std::size_t user, const char* field) {
  if (!(value >= 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument(fmt::format(
        "user {}: {} must be finite and non-negative, got {}", user, field,
        value));
  }
}

}  // namespace

double OutputSize(double input_bits, const OutputSizeMap& map) {
  return map(input_bits);
}

void SystemConfig::Validate() const {
  if (!(tau > 0.0)) {
    throw std::invalid_argument(fmt::format("tau must be positive, got {}", tau));
  }
  if (!(server_energy_per_cycle >= 0.0)) {
    throw std::invalid_argument(fmt::format(
        "g0 must be non-negative, got {}", server_energy_per_cycle));
  }
  if (cpu_cap && !(*cpu_cap > 0.0)) {
    throw std::invalid_argument(
        fmt::format("cpu_cap must be positive when present, got {}", *cpu_cap));
  }
}

void Scenario::Validate() const {
  config.Validate();
  if (users.empty()) throw std::invalid_argument("scenario has no users");
  for (std::size_t k = 0; k < users.size(); ++k) {
    const UserTask& u = users[k];
    RequireNonNegative(u.local_bits, k, "L");
    RequireNonNegative(u.server_bits, k, "B");
    RequireNonNegative(u.cycles, k, "C");
    RequireNonNegative(u.output_bits, k, "Y");
    RequireNonNegative(u.energy_per_cycle, k, "g");
    if (!(u.gain >= config.fading.epsilon()) || !std::isfinite(u.gain)) {
      throw ExcludedUserError(fmt::format(
          "user {}: beta {} is below the deep-fading threshold {}", k, u.gain,
          config.fading.epsilon()));
    }
  }
}

void ScenarioDistribution::Validate() const {
  if (num_users < 1) {
    throw std::invalid_argument(
        fmt::format("K must be at least 1, got {}", num_users));
  }
  if (!(mean_local_bits > 0.0 && mean_server_bits > 0.0 && mean_cycles > 0.0)) {
    throw std::invalid_argument("exponential means must be positive");
  }
  if (!(max_energy_per_cycle > 0.0)) {
    throw std::invalid_argument("g_max must be positive");
  }
  if (!(output_map.constant >= 0.0 && output_map.slope >= 0.0)) {
    throw std::invalid_argument("output map coefficients must be non-negative");
  }
}

Scenario SampleScenario(const ScenarioDistribution& dist,
                        const SystemConfig& config, Rng& rng) {
  Scenario scenario{config, {}};
  scenario.users.reserve(dist.num_users);
  for (int k = 0; k < dist.num_users; ++k) {
    UserTask u;
    u.local_bits = SampleExponential(rng, dist.mean_local_bits);
    u.server_bits = SampleExponential(rng, dist.mean_server_bits);
    u.cycles = SampleExponential(rng, dist.mean_cycles);
    u.energy_per_cycle = SampleUniform(rng, 0.0, dist.max_energy_per_cycle);
    u.gain = SampleFading(dist.fading, rng);
    u.output_bits = dist.output_map(u.aggregated_bits());
    scenario.users.push_back(u);
  }
  return scenario;
}

}  // namespace mecoff
