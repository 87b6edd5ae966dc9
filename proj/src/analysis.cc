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

#include <cmath>
#include <numbers>
#include <stdexcept>

#include <fmt/format.h>

namespace mecoff {

double ExpectedMaxLocalBits(int num_users, double mean_local_bits) {
  if (num_users < 1 || !(mean_local_bits > 0.0)) {
    throw std::invalid_argument(fmt::format(
        "E[L_max] needs K >= 1 and a positive mean, got K={} mean={}",
        num_users, mean_local_bits));
  }
  double harmonic = 0.0;
  for (int k = 1; k <= num_users; ++k) harmonic += 1.0 / k;
  return mean_local_bits * harmonic;
}

double MeanTimeSlope(const MeanTimeParams& p) {
  const double v = DownlinkRate(p.radio);
  const OutputSizeMap& f = p.output_map;
  return ExpectedMaxLocalBits(p.num_users, p.mean_local_bits) *
             std::numbers::ln2 / p.radio.bandwidth() +
         (f.constant + f.slope * p.mean_local_bits -
          (1.0 - f.slope) * p.mean_server_bits) /
             v;
}

double MeanTotalTime(int n, const MeanTimeParams& p) {
  if (n < 0 || n > p.num_users) {
    throw std::invalid_argument(
        fmt::format("n={} outside [0, {}]", n, p.num_users));
  }
  const double v = DownlinkRate(p.radio);
  return p.num_users * p.mean_server_bits / v + n * MeanTimeSlope(p);
}

int MaxOffloadingUsers(double tau, const MeanTimeParams& p) {
  const double slope = MeanTimeSlope(p);
  if (slope <= 0.0) return p.num_users;
  const double floor_time = p.num_users * p.mean_server_bits / DownlinkRate(p.radio);
  if (tau < floor_time) return 0;
  const double n = std::floor((tau - floor_time) / slope);
  return n >= p.num_users ? p.num_users : static_cast<int>(n);
}

RateComparison CompareUplinkRates(int num_users, double received_power,
                                  const RadioParams& radio) {
  if (num_users < 1) {
    throw std::invalid_argument(
        fmt::format("rate comparison needs K >= 1, got {}", num_users));
  }
  const double w = radio.bandwidth();
  const double n0 = radio.noise_power();
  const double p = received_power;
  return {w * std::log2(1.0 + p / ((num_users - 1) * p + n0)),
          w / num_users * std::log2(1.0 + p / n0)};
}

}  // namespace mecoff
