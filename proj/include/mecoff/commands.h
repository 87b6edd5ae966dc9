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

// Subcommands of the `mecoff` tool. Each returns the process exit code:
// 0 success, 1 input error, 2 infeasible (solve) or unexplained gap
// (validate).

#ifndef MECOFF_COMMANDS_H_
#define MECOFF_COMMANDS_H_

#include <cstdint>
#include <filesystem>
#include <optional>
#include <ostream>
#include <vector>

#include <json.hpp>

#include "mecoff/optimizer.h"

namespace mecoff {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitInfeasible = 2;

struct SolveArgs {
  std::filesystem::path input;
  std::optional<double> tau;
  std::optional<int> force_n;
};
int CmdSolve(const SolveArgs& args, std::ostream& out, std::ostream& err);

struct SweepArgs {
  std::filesystem::path config;
  std::filesystem::path out_dir;
  int workers = 1;
  std::optional<std::uint64_t> seed;
};
int CmdSweep(const SweepArgs& args, std::ostream& out, std::ostream& err);

inline constexpr int kValidateMaxUsers = 14;

struct ValidateArgs {
  int num_users = 10;
  int trials = 100;
  std::uint64_t seed = 1;
};
int CmdValidate(const ValidateArgs& args, std::ostream& out, std::ostream& err);

struct AnalyzeArgs {
  std::optional<std::filesystem::path> config;
};
int CmdAnalyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err);

// JSON document printed by `solve`; see docs/solve_output.schema.json.
nlohmann::json OutcomeToJson(const Scenario& scenario,
                             const SolveOutcome& outcome);

// Full command-line entry point (argument parsing included).
int RunCli(const std::vector<std::string>& argv, std::ostream& out,
           std::ostream& err);

}  // namespace mecoff

#endif  // MECOFF_COMMANDS_H_
