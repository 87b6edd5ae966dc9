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

// Experiment configuration files. The grammar (see docs/config_format.md):
//
//   # comment                  full-line or trailing
//   [section]                  prefixes following keys with "section."
//   key = value                value: number, true/false, bare word,
//                              "quoted string", or [v1, v2, ...]
//
// Keys are dotted ("system.tau"); a key may also be written fully qualified
// outside any section. Unknown keys, duplicate keys and malformed lines are
// errors. Every key is optional.

#ifndef MECOFF_CONFIG_H_
#define MECOFF_CONFIG_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mecoff/analysis.h"
#include "mecoff/sim_harness.h"
#include "mecoff/task_model.h"

namespace mecoff {

struct CliConfig {
  // [system]
  double bandwidth = 1.0;   // W
  double noise_power = 1.0; // N0
  double gamma_bs = 3.0;
  double gamma_user = 6.0;
  double epsilon = 0.05;
  double g0 = 1.0;
  double tau = 35.63;
  std::optional<double> cpu_cap;
  // [scenario]
  int num_users = 10;      // K
  double mean_L = 2.0;
  double mean_B = 4.0;
  double mean_C = 1.0;
  double g_max = 10.0;
  double c0 = 0.0;
  double c1 = 0.1;
  // [sweep]
  std::optional<std::string> sweep_param;
  std::vector<double> sweep_values;
  int trials = 2000;
  std::uint64_t seed = 1;
  // [solver]
  bool cap_with_mean_bound = false;

  SystemConfig ToSystemConfig() const;
  ScenarioDistribution ToDistribution() const;
  MeanTimeParams ToMeanTimeParams() const;
  // Throws InputError when no sweep parameter or values are configured.
  SweepSpec ToSweepSpec() const;
};

// Throws InputError ("<source>:<line>: ...") on malformed input.
CliConfig ParseConfig(std::string_view text, std::string_view source = "config");
CliConfig ReadConfigFile(const std::filesystem::path& path);

}  // namespace mecoff

#endif  // MECOFF_CONFIG_H_
