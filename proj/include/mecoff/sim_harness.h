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

// Monte Carlo parameter sweeps. Each (grid point, trial) pair gets its own
// seed from DeriveSeed(base seed, grid index, trial index) and its own RNG,
// so results do not depend on how trials are spread over workers.
//
// Per-trial values are rounded to 12 significant digits when recorded. The
// in-memory result is therefore exactly what the CSV holds, and aggregates
// recomputed from a re-read CSV match bit for bit.

#ifndef MECOFF_SIM_HARNESS_H_
#define MECOFF_SIM_HARNESS_H_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "mecoff/task_model.h"

namespace mecoff {

enum class SweptParam {
  kMeanServerBits,  // mean_B
  kTau,             // tau
  kMeanLocalBits,   // mean_L
  kGammaBs,         // gamma_BS
  kGammaUser,       // gamma_user
  kNumUsers,        // K
};

std::string_view SweptParamName(SweptParam param);
// Throws std::invalid_argument on an unknown name.
SweptParam ParseSweptParam(std::string_view name);

struct SweepSpec {
  ScenarioDistribution distribution;
  SystemConfig config;
  SweptParam param = SweptParam::kMeanServerBits;
  std::vector<double> values;
  int trials = 1;
  std::uint64_t seed = 1;
  // Cap the offloader count at the mean-level bound from MaxOffloadingUsers.
  bool cap_with_mean_bound = false;

  void Validate() const;
};

struct TrialRow {
  double value = 0.0;
  int trial = 0;
  std::uint64_t seed = 0;
  int n_star = -1;  // -1 when infeasible
  double total_energy = 0.0;  // +inf when infeasible
  double total_time = 0.0;    // min achievable time when infeasible
  bool feasible = false;
  double linearization_gap = 0.0;

  bool operator==(const TrialRow&) const = default;
};

// Energy and offloader-count statistics cover feasible trials only; the
// histogram counts feasible trials by n*, and infeasible trials are counted
// separately, so sum(histogram) + infeasible == trials.
struct ValueAggregate {
  double value = 0.0;
  int trials = 0;
  int feasible = 0;
  int infeasible = 0;
  double feasibility_rate = 0.0;
  double mean_energy = 0.0;
  double energy_stderr = 0.0;
  double mean_n = 0.0;
  double n_stderr = 0.0;
  std::vector<int> histogram;  // index n = 0..K

  bool operator==(const ValueAggregate&) const = default;
};

struct SweepResult {
  SweptParam param = SweptParam::kMeanServerBits;
  std::vector<double> values;
  int trials = 0;
  std::uint64_t seed = 0;
  int histogram_width = 0;
  std::vector<TrialRow> rows;  // ordered by (grid index, trial)
  std::vector<ValueAggregate> aggregates;
};

// Distribution and config for grid point `value_index` of the sweep.
void ApplySweptValue(const SweepSpec& spec, std::size_t value_index,
                     ScenarioDistribution& distribution, SystemConfig& config);

// The scenario that trial (value_index, trial) optimizes.
Scenario ScenarioForTrial(const SweepSpec& spec, std::size_t value_index,
                          int trial);

SweepResult RunSweep(const SweepSpec& spec, int workers);

// Deterministic fold over rows in order. Rows are grouped by their position:
// rows [i * trials, (i + 1) * trials) belong to values[i].
std::vector<ValueAggregate> Aggregate(const std::vector<TrialRow>& rows,
                                      const std::vector<double>& values,
                                      int trials, int histogram_width);

double RoundSignificant12(double x);

enum class OutputFormat { kCsv, kJson };

// kCsv writes `path` (one row per trial) and a companion
// `<stem>_summary<ext>` with the aggregates. kJson writes everything to
// `path`. Throws std::runtime_error naming the path on I/O failure.
void Emit(const SweepResult& result, OutputFormat format,
          const std::filesystem::path& path);

std::filesystem::path SummaryPath(const std::filesystem::path& trials_path);

struct TrialsCsv {
  SweptParam param = SweptParam::kMeanServerBits;
  std::vector<TrialRow> rows;
};
TrialsCsv ReadTrialsCsv(const std::filesystem::path& path);

}  // namespace mecoff

#endif  // MECOFF_SIM_HARNESS_H_
