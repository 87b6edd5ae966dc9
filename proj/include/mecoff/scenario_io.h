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

// Scenario files are JSON documents:
//
//   {
//     "config": {"W": 1, "N0": 1, "P_BS": 3, "P_user": 6, "epsilon": 0.05,
//                "g0": 1, "tau": 35.63, "cpu_cap": null},
//     "users": [{"L": 2, "B": 4, "C": 1, "Y": 0.6, "g": 5, "beta": 1.2}, ...]
//   }
//
// Every key is required (cpu_cap may be null). Unknown keys are rejected.

#ifndef MECOFF_SCENARIO_IO_H_
#define MECOFF_SCENARIO_IO_H_

#include <filesystem>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "mecoff/task_model.h"

namespace mecoff {

// Malformed input. The message names the offending key or line.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

nlohmann::json ScenarioToJson(const Scenario& scenario);
Scenario ScenarioFromJson(const nlohmann::json& doc);

Scenario ReadScenarioFile(const std::filesystem::path& path);
void WriteScenarioFile(const Scenario& scenario,
                       const std::filesystem::path& path);

}  // namespace mecoff

#endif  // MECOFF_SCENARIO_IO_H_
