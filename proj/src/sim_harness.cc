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

#include "mecoff/sim_harness.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <limits>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <fmt/format.h>
#include <json.hpp>

#include "mecoff/analysis.h"
#include "mecoff/optimizer.h"
#include "mecoff/rng.h"

namespace mecoff {

namespace {

constexpr std::string_view kTrialsHeader =
    "param,value,trial,seed,n_star,total_energy,total_time,feasible,"
    "linearization_gap";

constexpr std::string_view kConvention =
    "mean_energy, energy_stderr, mean_n and n_stderr average feasible trials "
    "only; infeasible trials are counted in 'infeasible', excluded from the "
    "n histogram, and carry total_energy=inf in the trials file";

std::string Num(double x) { return fmt::format("{:.12g}", x); }

std::ofstream OpenForWrite(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error(
        fmt::format("cannot open '{}' for writing", path.string()));
  }
  return out;
}

void CheckWritten(const std::ofstream& out, const std::filesystem::path& path) {
  if (!out) {
    throw std::runtime_error(fmt::format("write to '{}' failed", path.string()));
  }
}

int HistogramWidth(const SweepSpec& spec) {
  int k = spec.distribution.num_users;
  if (spec.param == SweptParam::kNumUsers) {
    for (double v : spec.values) k = std::max(k, static_cast<int>(v));
  }
  return k + 1;
}

TrialRow RunTrial(const SweepSpec& spec, std::size_t value_index, int trial) {
  ScenarioDistribution dist = spec.distribution;
  SystemConfig config = spec.config;
  ApplySweptValue(spec, value_index, dist, config);
  const std::uint64_t seed = DeriveSeed(spec.seed, value_index, trial);
  Rng rng(seed);
  const Scenario scenario = SampleScenario(dist, config, rng);

  OptimizeOptions options;
  if (spec.cap_with_mean_bound) {
    MeanTimeParams mp{dist.num_users, dist.mean_local_bits,
                      dist.mean_server_bits, dist.output_map, config.radio};
    options.max_offloaders = MaxOffloadingUsers(config.tau, mp);
  }
  const SolveOutcome outcome = Optimize(scenario, options);

  TrialRow row;
  row.value = RoundSignificant12(spec.values[value_index]);
  row.trial = trial;
  row.seed = seed;
  row.feasible = outcome.status == SolveStatus::kOptimal;
  row.n_star = row.feasible ? outcome.n_star : -1;
  row.total_energy = RoundSignificant12(outcome.energy);
  row.total_time = RoundSignificant12(outcome.time);
  row.linearization_gap =
      row.feasible ? RoundSignificant12(outcome.linearization_gap) : 0.0;
  return row;
}

// Splits on commas; the trials file never quotes fields.
std::vector<std::string> SplitCsv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

double ParseDouble(const std::string& s, const std::filesystem::path& path,
                   int line_no) {
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || *end != '\0') {
    throw std::runtime_error(fmt::format("{}:{}: bad number '{}'",
                                         path.string(), line_no, s));
  }
  return v;
}

long long ParseInt(const std::string& s, const std::filesystem::path& path,
                   int line_no) {
  char* end = nullptr;
  const long long v = std::strtoll(s.c_str(), &end, 10);
  if (s.empty() || *end != '\0') {
    throw std::runtime_error(fmt::format("{}:{}: bad integer '{}'",
                                         path.string(), line_no, s));
  }
  return v;
}

nlohmann::json NullableNumber(double x) {
  return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
}

}  // namespace

std::string_view SweptParamName(SweptParam param) {
  switch (param) {
    case SweptParam::kMeanServerBits: return "mean_B";
    case SweptParam::kTau: return "tau";
    case SweptParam::kMeanLocalBits: return "mean_L";
    case SweptParam::kGammaBs: return "gamma_BS";
    case SweptParam::kGammaUser: return "gamma_user";
    case SweptParam::kNumUsers: return "K";
  }
  return "?";
}

SweptParam ParseSweptParam(std::string_view name) {
  for (SweptParam p :
       {SweptParam::kMeanServerBits, SweptParam::kTau,
        SweptParam::kMeanLocalBits, SweptParam::kGammaBs,
        SweptParam::kGammaUser, SweptParam::kNumUsers}) {
    if (SweptParamName(p) == name) return p;
  }
  throw std::invalid_argument(fmt::format(
      "unknown sweep parameter '{}' (expected mean_B, tau, mean_L, gamma_BS, "
      "gamma_user or K)",
      name));
}

void SweepSpec::Validate() const {
  if (values.empty()) throw std::invalid_argument("sweep has no values");
  if (trials < 1) {
    throw std::invalid_argument(
        fmt::format("sweep needs at least one trial, got {}", trials));
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    ScenarioDistribution d = distribution;
    SystemConfig c = config;
    ApplySweptValue(*this, i, d, c);
    d.Validate();
    c.Validate();
  }
}

void ApplySweptValue(const SweepSpec& spec, std::size_t value_index,
                     ScenarioDistribution& dist, SystemConfig& config) {
  const double v = spec.values.at(value_index);
  const RadioParams& r = config.radio;
  switch (spec.param) {
    case SweptParam::kMeanServerBits: dist.mean_server_bits = v; break;
    case SweptParam::kTau: config.tau = v; break;
    case SweptParam::kMeanLocalBits: dist.mean_local_bits = v; break;
    case SweptParam::kGammaBs:
      config.radio = RadioParams(r.bandwidth(), r.noise_power(),
                                 v * r.noise_power(), r.user_received_power());
      break;
    case SweptParam::kGammaUser:
      config.radio = RadioParams(r.bandwidth(), r.noise_power(),
                                 r.bs_received_power(), v * r.noise_power());
      break;
    case SweptParam::kNumUsers:
      if (v != std::floor(v) || v < 1) {
        throw std::invalid_argument(
            fmt::format("K sweep values must be positive integers, got {}", v));
      }
      dist.num_users = static_cast<int>(v);
      break;
  }
  config.fading = dist.fading;
}

Scenario ScenarioForTrial(const SweepSpec& spec, std::size_t value_index,
                          int trial) {
  ScenarioDistribution dist = spec.distribution;
  SystemConfig config = spec.config;
  ApplySweptValue(spec, value_index, dist, config);
  Rng rng(DeriveSeed(spec.seed, value_index, trial));
  return SampleScenario(dist, config, rng);
}

double RoundSignificant12(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(Num(x).c_str(), nullptr);
}

SweepResult RunSweep(const SweepSpec& spec, int workers) {
  spec.Validate();
  if (workers < 1) {
    throw std::invalid_argument(
        fmt::format("worker count must be at least 1, got {}", workers));
  }
  SweepResult result;
  result.param = spec.param;
  for (double v : spec.values) result.values.push_back(RoundSignificant12(v));
  result.trials = spec.trials;
  result.seed = spec.seed;
  result.histogram_width = HistogramWidth(spec);

  const std::size_t total = spec.values.size() * spec.trials;
  result.rows.resize(total);
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto work = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      try {
        result.rows[i] = RunTrial(spec, i / spec.trials,
                                  static_cast<int>(i % spec.trials));
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    const int spawned = static_cast<int>(
        std::min<std::size_t>(static_cast<std::size_t>(workers), total));
    for (int w = 1; w < spawned; ++w) pool.emplace_back(work);
    work();
  }
  if (failure) std::rethrow_exception(failure);

  result.aggregates = Aggregate(result.rows, result.values, result.trials,
                                result.histogram_width);
  return result;
}

std::vector<ValueAggregate> Aggregate(const std::vector<TrialRow>& rows,
                                      const std::vector<double>& values,
                                      int trials, int histogram_width) {
  if (rows.size() != values.size() * static_cast<std::size_t>(trials)) {
    throw std::invalid_argument(fmt::format(
        "{} rows for {} values x {} trials", rows.size(), values.size(),
        trials));
  }
  std::vector<ValueAggregate> out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    ValueAggregate agg;
    agg.value = values[i];
    agg.trials = trials;
    agg.histogram.assign(histogram_width, 0);
    double sum_e = 0.0, sum_e2 = 0.0, sum_n = 0.0, sum_n2 = 0.0;
    for (int t = 0; t < trials; ++t) {
      const TrialRow& row = rows[i * trials + t];
      if (!row.feasible) {
        ++agg.infeasible;
        continue;
      }
      ++agg.feasible;
      sum_e += row.total_energy;
      sum_e2 += row.total_energy * row.total_energy;
      sum_n += row.n_star;
      sum_n2 += static_cast<double>(row.n_star) * row.n_star;
      if (row.n_star >= 0 && row.n_star < histogram_width) {
        ++agg.histogram[row.n_star];
      }
    }
    agg.feasibility_rate = static_cast<double>(agg.feasible) / trials;
    const double m = agg.feasible;
    if (agg.feasible == 0) {
      agg.mean_energy = agg.mean_n = std::numeric_limits<double>::quiet_NaN();
      agg.energy_stderr = agg.n_stderr = std::numeric_limits<double>::quiet_NaN();
    } else {
      agg.mean_energy = sum_e / m;
      agg.mean_n = sum_n / m;
      auto stderr_of = [m](double s, double s2) {
        if (m < 2) return 0.0;
        const double var = std::max(0.0, (s2 - s * s / m) / (m - 1));
        return std::sqrt(var / m);
      };
      agg.energy_stderr = stderr_of(sum_e, sum_e2);
      agg.n_stderr = stderr_of(sum_n, sum_n2);
    }
    out.push_back(std::move(agg));
  }
  return out;
}

std::filesystem::path SummaryPath(const std::filesystem::path& trials_path) {
  std::filesystem::path p = trials_path;
  p.replace_filename(trials_path.stem().string() + "_summary" +
                     trials_path.extension().string());
  return p;
}

void Emit(const SweepResult& result, OutputFormat format,
          const std::filesystem::path& path) {
  if (result.rows.empty()) {
    throw std::invalid_argument("refusing to emit an empty sweep");
  }
  const std::string_view param = SweptParamName(result.param);

  if (format == OutputFormat::kJson) {
    nlohmann::json doc;
    doc["param"] = param;
    doc["values"] = result.values;
    doc["trials"] = result.trials;
    doc["seed"] = result.seed;
    doc["convention"] = kConvention;
    nlohmann::json rows = nlohmann::json::array();
    for (const TrialRow& r : result.rows) {
      rows.push_back({{"value", r.value},
                      {"trial", r.trial},
                      {"seed", r.seed},
                      {"n_star", r.n_star},
                      {"total_energy", NullableNumber(r.total_energy)},
                      {"total_time", NullableNumber(r.total_time)},
                      {"feasible", r.feasible},
                      {"linearization_gap", r.linearization_gap}});
    }
    doc["rows"] = std::move(rows);
    nlohmann::json aggs = nlohmann::json::array();
    for (const ValueAggregate& a : result.aggregates) {
      aggs.push_back({{"value", a.value},
                      {"trials", a.trials},
                      {"feasible", a.feasible},
                      {"infeasible", a.infeasible},
                      {"feasibility_rate", a.feasibility_rate},
                      {"mean_energy", NullableNumber(a.mean_energy)},
                      {"energy_stderr", NullableNumber(a.energy_stderr)},
                      {"mean_n", NullableNumber(a.mean_n)},
                      {"n_stderr", NullableNumber(a.n_stderr)},
                      {"histogram", a.histogram}});
    }
    doc["aggregates"] = std::move(aggs);
    std::ofstream out = OpenForWrite(path);
    out << doc.dump(2) << '\n';
    CheckWritten(out, path);
    return;
  }

  {
    std::ofstream out = OpenForWrite(path);
    out << kTrialsHeader << '\n';
    for (const TrialRow& r : result.rows) {
      out << param << ',' << Num(r.value) << ',' << r.trial << ',' << r.seed
          << ',' << r.n_star << ',' << Num(r.total_energy) << ','
          << Num(r.total_time) << ',' << (r.feasible ? 1 : 0) << ','
          << Num(r.linearization_gap) << '\n';
    }
    CheckWritten(out, path);
  }

  const std::filesystem::path summary = SummaryPath(path);
  std::ofstream out = OpenForWrite(summary);
  out << "# " << kConvention << '\n';
  out << "param,value,trials,feasible,infeasible,feasibility_rate,mean_energy,"
         "energy_stderr,mean_n,n_stderr";
  for (int n = 0; n < result.histogram_width; ++n) out << ",n" << n;
  out << '\n';
  for (const ValueAggregate& a : result.aggregates) {
    out << param << ',' << Num(a.value) << ',' << a.trials << ',' << a.feasible
        << ',' << a.infeasible << ',' << Num(a.feasibility_rate) << ','
        << Num(a.mean_energy) << ',' << Num(a.energy_stderr) << ','
        << Num(a.mean_n) << ',' << Num(a.n_stderr);
    for (int c : a.histogram) out << ',' << c;
    out << '\n';
  }
  CheckWritten(out, summary);
}

TrialsCsv ReadTrialsCsv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error(fmt::format("cannot open '{}'", path.string()));
  TrialsCsv out;
  std::string line;
  int line_no = 0;
  bool saw_header = false;
  bool saw_param = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (!saw_header) {
      if (line != kTrialsHeader) {
        throw std::runtime_error(fmt::format("{}:{}: unexpected header",
                                             path.string(), line_no));
      }
      saw_header = true;
      continue;
    }
    const std::vector<std::string> f = SplitCsv(line);
    if (f.size() != 9) {
      throw std::runtime_error(fmt::format("{}:{}: expected 9 fields, got {}",
                                           path.string(), line_no, f.size()));
    }
    const SweptParam param = ParseSweptParam(f[0]);
    if (saw_param && param != out.param) {
      throw std::runtime_error(fmt::format("{}:{}: mixed sweep parameters",
                                           path.string(), line_no));
    }
    out.param = param;
    saw_param = true;
    TrialRow r;
    r.value = ParseDouble(f[1], path, line_no);
    r.trial = static_cast<int>(ParseInt(f[2], path, line_no));
    r.seed = std::strtoull(f[3].c_str(), nullptr, 10);
    r.n_star = static_cast<int>(ParseInt(f[4], path, line_no));
    r.total_energy = ParseDouble(f[5], path, line_no);
    r.total_time = ParseDouble(f[6], path, line_no);
    r.feasible = ParseInt(f[7], path, line_no) != 0;
    r.linearization_gap = ParseDouble(f[8], path, line_no);
    out.rows.push_back(r);
  }
  if (!saw_header) {
    throw std::runtime_error(fmt::format("{}: missing header", path.string()));
  }
  return out;
}

}  // namespace mecoff
