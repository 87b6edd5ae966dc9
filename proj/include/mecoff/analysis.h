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

// Closed-form estimates for iid exponential task sizes. These are
// approximations (u(n) ~ W / (n ln 2), linear output map) and are never used
// by the exact optimizer except as the optional cap on the offloader count.

#ifndef MECOFF_ANALYSIS_H_
#define MECOFF_ANALYSIS_H_

#include "mecoff/channel.h"
#include "mecoff/task_model.h"

namespace mecoff {

struct MeanTimeParams {
  int num_users = 10;
  double mean_local_bits = 2.0;
  double mean_server_bits = 4.0;
  OutputSizeMap output_map;
  RadioParams radio = RadioParams::FromSnr(1.0, 3.0, 6.0);
};

// E[max of K iid Exp(mean)] = mean * H_K.
double ExpectedMaxLocalBits(int num_users, double mean_local_bits);

// Per-offloader slope of the mean total time:
// E[L_max] ln2 / W + (c0 + c1 Lbar - (1 - c1) Bbar) / v.
double MeanTimeSlope(const MeanTimeParams& params);

// K Bbar / v + n * slope.
double MeanTotalTime(int n, const MeanTimeParams& params);

// Largest n in [0, K] whose mean total time fits in tau; K when the slope is
// not positive.
int MaxOffloadingUsers(double tau, const MeanTimeParams& params);

struct RateComparison {
  double simultaneous;  // per-user rate, all K transmitting at once
  double tdma;          // per-user rate, slot split K ways
};

RateComparison CompareUplinkRates(int num_users, double received_power,
                                  const RadioParams& radio);

}  // namespace mecoff

#endif  // MECOFF_ANALYSIS_H_
