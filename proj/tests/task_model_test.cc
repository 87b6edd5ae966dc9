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

#include <gtest/gtest.h>

#include "mecoff/scenario_io.h"

namespace mecoff {
namespace {

TEST(OutputSizeTest, LinearMap) {
  EXPECT_EQ(OutputSize(0.0, {0.0, 0.1}), 0.0);
  EXPECT_DOUBLE_EQ(OutputSize(12.0, {0.0, 0.1}), 1.2);
  EXPECT_DOUBLE_EQ(OutputSize(10.0, {2.0, 0.1}), 3.0);
}

TEST(SystemConfigTest, Validation) {
  SystemConfig c;
  EXPECT_NO_THROW(c.Validate());
  c.tau = 0.0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c.tau = 1.0;
  c.cpu_cap = 0.0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
  c.cpu_cap = 2.0;
  c.server_energy_per_cycle = -1.0;
  EXPECT_THROW(c.Validate(), std::invalid_argument);
}

TEST(ScenarioTest, ValidationNamesUserAndField) {
  Scenario s;
  EXPECT_THROW(s.Validate(), std::invalid_argument);  // no users
  s.users.push_back({.local_bits = 1, .server_bits = 1, .cycles = 1,
                     .output_bits = 0.2, .energy_per_cycle = 1, .gain = 1});
  EXPECT_NO_THROW(s.Validate());
  s.users.push_back(s.users[0]);
  s.users[1].server_bits = -1;
  try {
    s.Validate();
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_NE(std::string(e.what()).find("user 1: B"), std::string::npos);
  }
  s.users[1].server_bits = 1;
  s.users[1].gain = 0.01;
  EXPECT_THROW(s.Validate(), ExcludedUserError);
}

TEST(SampleScenarioTest, DeterministicForSeed) {
  const ScenarioDistribution dist;
  const SystemConfig config;
  Rng a(99), b(99);
  EXPECT_EQ(SampleScenario(dist, config, a), SampleScenario(dist, config, b));
}

TEST(SampleScenarioTest, OutputIsTenthOfInputAndUsersAreValid) {
  ScenarioDistribution dist;
  dist.num_users = 500;
  Rng rng(3);
  const Scenario s = SampleScenario(dist, SystemConfig{}, rng);
  ASSERT_EQ(s.size(), 500u);
  EXPECT_NO_THROW(s.Validate());
  for (const UserTask& u : s.users) {
    // Re-deriving Y from the stored L and B reproduces it exactly.
    EXPECT_EQ(u.output_bits, 0.1 * (u.local_bits + u.server_bits));
    EXPECT_GE(u.energy_per_cycle, 0.0);
    EXPECT_LT(u.energy_per_cycle, 10.0);
    EXPECT_GE(u.gain, 0.05);
  }
}

TEST(SampleScenarioTest, SampleMeansMatchDistribution) {
  ScenarioDistribution dist;
  dist.num_users = 100000;
  dist.mean_local_bits = 2.0;
  dist.mean_server_bits = 4.0;
  Rng rng(17);
  const Scenario s = SampleScenario(dist, SystemConfig{}, rng);
  double l = 0, b = 0, c = 0, g = 0;
  for (const UserTask& u : s.users) {
    l += u.local_bits;
    b += u.server_bits;
    c += u.cycles;
    g += u.energy_per_cycle;
  }
  const double n = dist.num_users;
  EXPECT_NEAR(l / n, 2.0, 0.05);
  // Three standard errors of each sample mean.
  EXPECT_NEAR(b / n, 4.0, 3 * 4.0 / std::sqrt(n));
  EXPECT_NEAR(c / n, 1.0, 3 * 1.0 / std::sqrt(n));
  EXPECT_NEAR(g / n, 5.0, 3 * (10.0 / std::sqrt(12.0)) / std::sqrt(n));
}

TEST(ScenarioIoTest, RoundTripIsLossless) {
  ScenarioDistribution dist;
  dist.num_users = 25;
  SystemConfig config;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    config.cpu_cap = seed == 2 ? std::optional<double>(3.25) : std::nullopt;
    Rng rng(seed);
    const Scenario s = SampleScenario(dist, config, rng);
    const Scenario back = ScenarioFromJson(
        nlohmann::json::parse(ScenarioToJson(s).dump()));
    EXPECT_EQ(back, s);
  }
}

TEST(ScenarioIoTest, RejectsMalformedDocuments) {
  Rng rng(1);
  ScenarioDistribution dist;
  dist.num_users = 2;
  const nlohmann::json good = ScenarioToJson(SampleScenario(dist, {}, rng));

  nlohmann::json doc = good;
  doc["config"]["bogus"] = 1;
  EXPECT_THROW(ScenarioFromJson(doc), InputError);

  doc = good;
  doc["users"][1].erase("beta");
  try {
    ScenarioFromJson(doc);
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("users[1]"), std::string::npos);
  }

  doc = good;
  doc["config"]["tau"] = "ten";
  EXPECT_THROW(ScenarioFromJson(doc), InputError);

  doc = good;
  doc["config"].erase("cpu_cap");
  EXPECT_THROW(ScenarioFromJson(doc), InputError);

  doc = good;
  doc["users"][0]["beta"] = 0.01;
  EXPECT_THROW(ScenarioFromJson(doc), InputError);
}

}  // namespace
}  // namespace mecoff
