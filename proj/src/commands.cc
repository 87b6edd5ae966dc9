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

#include "mecoff/commands.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "mecoff/analysis.h"
#include "mecoff/config.h"
#include "mecoff/rng.h"
#include "mecoff/scenario_io.h"
#include "mecoff/sim_harness.h"

namespace mecoff {

namespace {

using nlohmann::json;

json NullableNumber(double x) {
  return std::isfinite(x) ? json(x) : json(nullptr);
}

bool RelativelyEqual(double a, double b, double tol = 1e-9) {
  if (std::isinf(a) || std::isinf(b)) return a == b;
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

void PrintSolveTable(const SolveOutcome& o, double tau, std::ostream& out) {
  const bool optimal = o.status == SolveStatus::kOptimal;
  fmt::print(out, "status             {}\n", optimal ? "optimal" : "infeasible");
  if (optimal) {
    fmt::print(out, "n*                 {}\n", o.n_star);
    fmt::print(out, "total energy       {:.12g}\n", o.energy);
    fmt::print(out, "total time         {:.12g} (tau {:.12g})\n", o.time, tau);
    fmt::print(out, "linearization gap  {:.12g}\n", o.linearization_gap);
  } else {
    fmt::print(out, "min feasible tau   {:.12g} (tau {:.12g})\n",
               o.min_feasible_tau.value_or(
                   std::numeric_limits<double>::infinity()),
               tau);
  }
  std::string bits;
  for (std::uint8_t b : o.decision.bits()) bits += b ? '1' : '0';
  fmt::print(out, "decision           {}\n\n", bits);
  fmt::print(out, "{:>4}  {:>20}  {:>8}  {:>6}\n", "n", "E_hat(n)", "feasible",
             "nodes");
  for (const PerCountResult& r : o.per_n) {
    fmt::print(out, "{:>4}  {:>20.12g}  {:>8}  {:>6}\n", r.n, r.energy,
               r.feasible ? "yes" : "no", r.nodes_explored);
  }
  out << '\n';
}

}  // namespace

json OutcomeToJson(const Scenario& scenario, const SolveOutcome& o) {
  const bool optimal = o.status == SolveStatus::kOptimal;
  json doc;
  doc["status"] = optimal ? "optimal" : "infeasible";
  doc["n_star"] = optimal ? json(o.n_star) : json(nullptr);
  doc["decision"] = std::vector<int>(o.decision.bits().begin(),
                                     o.decision.bits().end());
  std::vector<int> offloaders;
  for (std::size_t k = 0; k < o.decision.size(); ++k) {
    if (o.decision.offloads(k)) offloaders.push_back(static_cast<int>(k));
  }
  doc["offloading_set"] = offloaders;
  doc["energy"] = NullableNumber(o.energy);
  doc["time"] = NullableNumber(o.time);
  doc["tau"] = scenario.config.tau;
  doc["linearization_gap"] = o.linearization_gap;
  doc["min_feasible_tau"] =
      o.min_feasible_tau ? NullableNumber(*o.min_feasible_tau) : json(nullptr);
  json per_n = json::array();
  for (const PerCountResult& r : o.per_n) {
    per_n.push_back({{"n", r.n},
                     {"energy", NullableNumber(r.energy)},
                     {"feasible", r.feasible},
                     {"nodes_explored", r.nodes_explored}});
  }
  doc["per_n"] = std::move(per_n);
  doc["breakdown"] = {
      {"total_energy", NullableNumber(o.breakdown.total_energy)},
      {"total_time", NullableNumber(o.breakdown.total_time)},
      {"uplink_time", o.breakdown.uplink_time},
      {"per_user_energy", o.breakdown.per_user_energy},
      {"per_user_downlink_time", o.breakdown.per_user_downlink_time}};
  return doc;
}

int CmdSolve(const SolveArgs& args, std::ostream& out, std::ostream& err) {
  Scenario scenario;
  try {
    scenario = ReadScenarioFile(args.input);
    if (args.tau) {
      scenario.config.tau = *args.tau;
      scenario.config.Validate();
    }
    if (args.force_n &&
        (*args.force_n < 0 || *args.force_n > static_cast<int>(scenario.size()))) {
      throw InputError(fmt::format("--force-n {} outside [0, {}]", *args.force_n,
                                   scenario.size()));
    }
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitInputError;
  }
  OptimizeOptions options;
  options.force_n = args.force_n;
  const SolveOutcome outcome = Optimize(scenario, options);
  PrintSolveTable(outcome, scenario.config.tau, out);
  out << OutcomeToJson(scenario, outcome).dump(2) << '\n';
  return outcome.status == SolveStatus::kOptimal ? kExitOk : kExitInfeasible;
}

int CmdSweep(const SweepArgs& args, std::ostream& out, std::ostream& err) {
  SweepSpec spec;
  try {
    const CliConfig config = ReadConfigFile(args.config);
    spec = config.ToSweepSpec();
    if (args.seed) spec.seed = *args.seed;
    spec.Validate();
    if (args.workers < 1) throw InputError("--workers must be at least 1");
    std::filesystem::create_directories(args.out_dir);
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitInputError;
  }

  const SweepResult result = RunSweep(spec, args.workers);
  const std::filesystem::path csv = args.out_dir / "sweep.csv";
  const std::filesystem::path js = args.out_dir / "sweep.json";
  try {
    Emit(result, OutputFormat::kCsv, csv);
    Emit(result, OutputFormat::kJson, js);
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitInputError;
  }

  fmt::print(out, "{:>12}  {:>14}  {:>10}  {:>8}  {:>9}\n",
             SweptParamName(result.param), "mean_energy", "mean_n",
             "feasible", "mode_n");
  for (const ValueAggregate& a : result.aggregates) {
    const auto mode = std::max_element(a.histogram.begin(), a.histogram.end()) -
                      a.histogram.begin();
    fmt::print(out, "{:>12.6g}  {:>14.6f}  {:>10.4f}  {:>8.4f}  {:>9}\n",
               a.value, a.mean_energy, a.mean_n, a.feasibility_rate, mode);
  }
  fmt::print(out, "wrote {}, {}, {}\n", csv.string(), SummaryPath(csv).string(),
             js.string());
  return kExitOk;
}

int CmdValidate(const ValidateArgs& args, std::ostream& out, std::ostream& err) {
  if (args.num_users < 1 || args.num_users > kValidateMaxUsers) {
    fmt::print(err, "error: --k must lie in [1, {}], got {}\n",
               kValidateMaxUsers, args.num_users);
    return kExitInputError;
  }
  if (args.trials < 1) {
    fmt::print(err, "error: --trials must be at least 1, got {}\n", args.trials);
    return kExitInputError;
  }
  CliConfig defaults;
  defaults.num_users = args.num_users;
  const ScenarioDistribution dist = defaults.ToDistribution();
  const SystemConfig config = defaults.ToSystemConfig();

  int matches = 0;
  int conservative = 0;
  int unexplained = 0;
  int infeasible = 0;
  double max_gap = 0.0;
  double max_lin_gap = 0.0;
  double sum_lin_gap = 0.0;
  int optimal_count = 0;
  for (int t = 0; t < args.trials; ++t) {
    Rng rng(DeriveSeed(args.seed, 0, t));
    const Scenario scenario = SampleScenario(dist, config, rng);
    const SolveOutcome opt = Optimize(scenario);
    const BruteForceResult literal =
        BruteForceOptimize(scenario, TimeModel::kLiteral);
    const BruteForceResult linearized =
        BruteForceOptimize(scenario, TimeModel::kLinearized);
    const bool opt_ok = opt.status == SolveStatus::kOptimal;
    if (opt_ok) {
      ++optimal_count;
      sum_lin_gap += opt.linearization_gap;
      max_lin_gap = std::max(max_lin_gap, opt.linearization_gap);
    }
    if (!opt_ok && !literal.feasible) {
      ++infeasible;
      ++matches;
      continue;
    }
    if (opt_ok && literal.feasible && RelativelyEqual(opt.energy, literal.energy)) {
      ++matches;
      continue;
    }
    // The optimizer may only lose to brute force when the literal optimum
    // leaves out the user with the largest L (so the all-users L_max
    // over-charges it), and must still match the linearized-model optimum.
    const double gap = opt_ok ? opt.energy - literal.energy
                              : std::numeric_limits<double>::infinity();
    max_gap = std::max(max_gap, gap);
    const bool excludes_max_l =
        literal.feasible && !literal.decision.offloads(ArgmaxLocalBits(scenario)) &&
        literal.decision.count() > 0;
    const bool matches_model =
        opt_ok ? linearized.feasible &&
                     RelativelyEqual(opt.energy, linearized.energy)
               : !linearized.feasible;
    if (gap > 0.0 && excludes_max_l && matches_model) {
      ++conservative;
    } else {
      ++unexplained;
      fmt::print(err, "trial {}: unexplained gap {:.12g}\n", t, gap);
    }
  }
  fmt::print(out, "trials                     {}\n", args.trials);
  fmt::print(out, "K                          {}\n", args.num_users);
  fmt::print(out, "objective match rate       {:.6f}\n",
             static_cast<double>(matches) / args.trials);
  fmt::print(out, "infeasible (both)          {}\n", infeasible);
  fmt::print(out, "conservatism gaps          {} ({:.4f}%)\n", conservative,
             100.0 * conservative / args.trials);
  fmt::print(out, "max energy gap             {:.12g}\n", max_gap);
  fmt::print(out, "unexplained gaps           {}\n", unexplained);
  fmt::print(out, "mean linearization gap     {:.12g}\n",
             optimal_count ? sum_lin_gap / optimal_count : 0.0);
  fmt::print(out, "max linearization gap      {:.12g}\n", max_lin_gap);
  return unexplained == 0 ? kExitOk : kExitInfeasible;
}

int CmdAnalyze(const AnalyzeArgs& args, std::ostream& out, std::ostream& err) {
  CliConfig config;
  try {
    if (args.config) config = ReadConfigFile(*args.config);
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitInputError;
  }
  const MeanTimeParams base = config.ToMeanTimeParams();
  const double v = DownlinkRate(base.radio);
  fmt::print(out, "v = {:.12g}, u(1) = {:.12g}, tau = {:.12g}, mean_B = {:.12g}\n\n",
             v, UplinkRateInversion(1, base.radio), config.tau,
             config.mean_B);
  fmt::print(out, "{:>4}  {:>12}  {:>12}  {:>12}  {:>5}  {:>12}  {:>12}\n", "K",
             "E[L_max]", "theta", "K*mean_B/v", "n_bar", "U_sim", "U_tdma");
  for (int k = 1; k <= config.num_users; ++k) {
    MeanTimeParams p = base;
    p.num_users = k;
    const RateComparison rates =
        CompareUplinkRates(k, base.radio.bs_received_power(), base.radio);
    fmt::print(out, "{:>4}  {:>12.6f}  {:>12.6f}  {:>12.6f}  {:>5}  {:>12.6f}  {:>12.6f}\n",
               k, ExpectedMaxLocalBits(k, p.mean_local_bits), MeanTimeSlope(p),
               MeanTotalTime(0, p), MaxOffloadingUsers(config.tau, p),
               rates.simultaneous, rates.tdma);
  }
  return kExitOk;
}

int RunCli(const std::vector<std::string>& argv, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Energy-optimal offloading for mobile edge computing with "
               "server-side data"};
  app.require_subcommand(1);

  SolveArgs solve_args;
  auto* solve = app.add_subcommand("solve", "Optimize one scenario file");
  solve->add_option("--input", solve_args.input, "Scenario JSON file")->required();
  solve->add_option("--tau", solve_args.tau, "Override the time budget");
  solve->add_option("--force-n", solve_args.force_n,
                    "Only consider this many offloading users");

  SweepArgs sweep_args;
  std::optional<std::uint64_t> sweep_seed;
  auto* sweep = app.add_subcommand("sweep", "Run a Monte Carlo sweep");
  sweep->add_option("--config", sweep_args.config, "Experiment config")->required();
  sweep->add_option("--out", sweep_args.out_dir, "Output directory")->required();
  sweep->add_option("--workers", sweep_args.workers, "Worker threads");
  sweep->add_option("--seed", sweep_seed, "Override the base seed");

  ValidateArgs validate_args;
  auto* validate = app.add_subcommand(
      "validate", "Compare the optimizer with 2^K brute force");
  validate->add_option("--k", validate_args.num_users, "Users per scenario")
      ->required();
  validate->add_option("--trials", validate_args.trials, "Random scenarios")
      ->required();
  validate->add_option("--seed", validate_args.seed, "Base seed")->required();

  AnalyzeArgs analyze_args;
  std::filesystem::path analyze_config;
  auto* analyze = app.add_subcommand("analyze", "Closed-form estimates");
  analyze->add_option("--config", analyze_config, "Experiment config");

  std::vector<const char*> raw;
  raw.reserve(argv.size());
  for (const std::string& a : argv) raw.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(raw.size()), raw.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitInputError;
  }

  try {
    if (*solve) return CmdSolve(solve_args, out, err);
    if (*sweep) {
      sweep_args.seed = sweep_seed;
      return CmdSweep(sweep_args, out, err);
    }
    if (*validate) return CmdValidate(validate_args, out, err);
    if (!analyze_config.empty()) analyze_args.config = analyze_config;
    return CmdAnalyze(analyze_args, out, err);
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitInputError;
  }
}

}  // namespace mecoff
