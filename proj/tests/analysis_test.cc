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

#include "mecoff/analysis.h"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "mecoff/rng.h"

namespace mecoff {
namespace {

constexpr double kLog2Of7 = 2.807354922057604;

TEST(ExpectedMaxLocalBitsTest, HarmonicValues) {
  EXPECT_DOUBLE_EQ(ExpectedMaxLocalBits(1, 2.0), 2.0);
  EXPECT_NEAR(ExpectedMaxLocalBits(4, 2.0), 25.0 / 6.0, 1e-12);
  EXPECT_NEAR(ExpectedMaxLocalBits(10, 2.0), 5.8579365079365076, 1e-12);
}

// Property: agrees with the Monte Carlo mean of the maximum within 3 SE.
TEST(ExpectedMaxLocalBitsTest, MonteCarlo) {
  for (int k : {1, 4, 10}) {
    Rng rng(400 + k);
    constexpr int kTrials = 100000;
    double sum = 0.0, sum_sq = 0.0;
    for (int t = 0; t < kTrials; ++t) {
      double m = 0.0;
      for (int i = 0; i < k; ++i) m = std::max(m, SampleExponential(rng, 2.0));
      sum += m;
      sum_sq += m * m;
    }
    const double mean = sum / kTrials;
    const double var = (sum_sq - kTrials * mean * mean) / (kTrials - 1);
    EXPECT_NEAR(mean, ExpectedMaxLocalBits(k, 2.0),
                3.0 * std::sqrt(var / kTrials))
        << "K=" << k;
  }
}

TEST(MeanTimeSlopeTest, Defaults) {
  const MeanTimeParams p;
  EXPECT_NEAR(MeanTimeSlope(p), 2.8493077382080862, 1e-12);
  EXPECT_NEAR(MeanTimeSlope(p), 2.849, 5e-4);
}

TEST(MeanTimeSlopeTest, FullOutputCancelsServerData) {
  MeanTimeParams p;
  p.output_map = {0.0, 1.0};
  const double want =
      ExpectedMaxLocalBits(10, 2.0) * std::numbers::ln2 + 2.0 / kLog2Of7;
  for (double b : {0.0, 4.0, 100.0}) {
    p.mean_server_bits = b;
    EXPECT_NEAR(MeanTimeSlope(p), want, 1e-12);
  }
}

TEST(MeanTimeSlopeTest, LargeServerDataTurnsNegative) {
  MeanTimeParams p;
  p.mean_server_bits = 50.0;
  EXPECT_LT(MeanTimeSlope(p), 0.0);
}

TEST(MeanTotalTimeTest, Values) {
  const MeanTimeParams p;
  EXPECT_NEAR(MeanTotalTime(0, p), 40.0 / kLog2Of7, 1e-12);
  EXPECT_NEAR(MeanTotalTime(3, p), 22.796210698945146, 1e-12);
}

TEST(MeanTotalTimeTest, ExactlyAffine) {
  MeanTimeParams p;
  for (double b : {0.5, 4.0, 8.0}) {
    p.mean_server_bits = b;
    const double slope = MeanTimeSlope(p);
    for (int n = 0; n <= 10; ++n) {
      EXPECT_EQ(MeanTotalTime(n, p), MeanTotalTime(0, p) + n * slope);
    }
  }
  p.mean_server_bits = 2 * ExpectedMaxLocalBits(10, 2.0) *
                           std::numbers::ln2 * kLog2Of7 / 1.8 +
                       0.2 / 0.9;
  EXPECT_NEAR(MeanTotalTime(10, p), MeanTotalTime(0, p), 1e-9 * 10);
}

TEST(MaxOffloadingUsersTest, Examples) {
  const MeanTimeParams p;
  const double floor = MeanTotalTime(0, p);
  const double theta = MeanTimeSlope(p);
  EXPECT_EQ(MaxOffloadingUsers(floor * 0.99, p), 0);
  EXPECT_EQ(MaxOffloadingUsers(floor + 2.5 * theta, p), 2);
  EXPECT_EQ(MaxOffloadingUsers(1e9, p), 10);
  MeanTimeParams negative = p;
  negative.mean_server_bits = 50.0;
  EXPECT_EQ(MaxOffloadingUsers(1.0, negative), 10);
}

TEST(MaxOffloadingUsersTest, Monotone) {
  MeanTimeParams p;
  int last = 0;
  for (double tau = 1.0; tau < 60.0; tau += 0.25) {
    const int n = MaxOffloadingUsers(tau, p);
    EXPECT_GE(n, last);
    last = n;
  }
  // Larger theta at fixed tau: raise mean L.
  last = 10;
  for (double l = 0.5; l < 6.0; l += 0.25) {
    p.mean_local_bits = l;
    const int n = MaxOffloadingUsers(30.0, p);
    EXPECT_LE(n, last);
    last = n;
  }
}

TEST(CompareUplinkRatesTest, Values) {
  const RadioParams unit = RadioParams::FromSnr(1.0, 3.0, 6.0);
  const RateComparison one = CompareUplinkRates(1, 3.0, unit);
  EXPECT_DOUBLE_EQ(one.simultaneous, 2.0);
  EXPECT_DOUBLE_EQ(one.tdma, 2.0);
  const RateComparison twenty = CompareUplinkRates(20, 3.0, unit);
  EXPECT_NEAR(twenty.simultaneous, 0.07275634243531415, 1e-12);
  EXPECT_NEAR(twenty.tdma, 0.1, 1e-12);
  const RateComparison big = CompareUplinkRates(1000, 1000.0, unit);
  EXPECT_NEAR(1000 * big.simultaneous, 1.4434154255310578, 1e-9);
  EXPECT_LT(std::abs(1000 * big.simultaneous - std::numbers::log2e),
            0.01 * std::numbers::log2e);
}

}  // namespace
}  // namespace mecoff
