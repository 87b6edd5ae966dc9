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

#include "mecoff/scenario_io.h"

#include <fstream>
#include <initializer_list>
#include <set>
#include <string_view>

#include <fmt/format.h>

namespace mecoff {

using nlohmann::json;

namespace {

void RejectUnknownKeys(const json& obj, std::initializer_list<const char*> keys,
                       std::string_view where) {
  const std::set<std::string_view> allowed(keys.begin(), keys.end());
  for (const auto& [key, value] : obj.items()) {
    if (!allowed.contains(key)) {
      throw InputError(fmt::format("{}: unknown key '{}'", where, key));
    }
  }
}

double Number(const json& obj, const char* key, std::string_view where) {
  if (!obj.contains(key)) {
    throw InputError(fmt::format("{}: missing key '{}'", where, key));
  }
  const json& v = obj.at(key);
  if (!v.is_number()) {
    throw InputError(fmt::format("{}: key '{}' must be a number", where, key));
  }
  return v.get<double>();
}

}  // namespace

json ScenarioToJson(const Scenario& scenario) {
  const SystemConfig& c = scenario.config;
  json config = {
      {"W", c.radio.bandwidth()},
      {"N0", c.radio.noise_power()},
      {"P_BS", c.radio.bs_received_power()},
      {"P_user", c.radio.user_received_power()},
      {"epsilon", c.fading.epsilon()},
      {"g0", c.server_energy_per_cycle},
      {"tau", c.tau},
      {"cpu_cap", c.cpu_cap ? json(*c.cpu_cap) : json(nullptr)},
  };
  json users = json::array();
  for (const UserTask& u : scenario.users) {
    users.push_back({{"L", u.local_bits},
                     {"B", u.server_bits},
                     {"C", u.cycles},
                     {"Y", u.output_bits},
                     {"g", u.energy_per_cycle},
                     {"beta", u.gain}});
  }
  return {{"config", std::move(config)}, {"users", std::move(users)}};
}

Scenario ScenarioFromJson(const json& doc) {
  if (!doc.is_object()) throw InputError("scenario: top level must be an object");
  RejectUnknownKeys(doc, {"config", "users"}, "scenario");
  if (!doc.contains("config") || !doc["config"].is_object()) {
    throw InputError("scenario: missing object 'config'");
  }
  if (!doc.contains("users") || !doc["users"].is_array()) {
    throw InputError("scenario: missing array 'users'");
  }
  const json& cfg = doc["config"];
  RejectUnknownKeys(
      cfg, {"W", "N0", "P_BS", "P_user", "epsilon", "g0", "tau", "cpu_cap"},
      "config");

  Scenario scenario;
  try {
    scenario.config.radio =
        RadioParams(Number(cfg, "W", "config"), Number(cfg, "N0", "config"),
                    Number(cfg, "P_BS", "config"),
                    Number(cfg, "P_user", "config"));
    scenario.config.fading = FadingParams(Number(cfg, "epsilon", "config"));
  } catch (const std::invalid_argument& e) {
    throw InputError(fmt::format("config: {}", e.what()));
  }
  scenario.config.server_energy_per_cycle = Number(cfg, "g0", "config");
  scenario.config.tau = Number(cfg, "tau", "config");
  if (!cfg.contains("cpu_cap")) {
    throw InputError("config: missing key 'cpu_cap' (use null for no cap)");
  }
  if (!cfg["cpu_cap"].is_null()) {
    scenario.config.cpu_cap = Number(cfg, "cpu_cap", "config");
  }

  const json& users = doc["users"];
  for (std::size_t k = 0; k < users.size(); ++k) {
    const std::string where = fmt::format("users[{}]", k);
    const json& u = users[k];
    if (!u.is_object()) throw InputError(where + ": must be an object");
    RejectUnknownKeys(u, {"L", "B", "C", "Y", "g", "beta"}, where);
    scenario.users.push_back({.local_bits = Number(u, "L", where),
                              .server_bits = Number(u, "B", where),
                              .cycles = Number(u, "C", where),
                              .output_bits = Number(u, "Y", where),
                              .energy_per_cycle = Number(u, "g", where),
                              .gain = Number(u, "beta", where)});
  }
  try {
    scenario.Validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return scenario;
}

Scenario ReadScenarioFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError(fmt::format("cannot open '{}'", path.string()));
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(fmt::format("{}: {}", path.string(), e.what()));
  }
  try {
    return ScenarioFromJson(doc);
  } catch (const InputError& e) {
    throw InputError(fmt::format("{}: {}", path.string(), e.what()));
  }
}

void WriteScenarioFile(const Scenario& scenario,
                       const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error(
        fmt::format("cannot open '{}' for writing", path.string()));
  }
  out << ScenarioToJson(scenario).dump(2) << '\n';
  if (!out) {
    throw std::runtime_error(fmt::format("write to '{}' failed", path.string()));
  }
}

}  // namespace mecoff
