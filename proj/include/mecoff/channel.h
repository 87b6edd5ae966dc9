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

// Radio-layer closed forms for the single-cell TDD system: simultaneous
// (interference-limited) uplink, TDMA downlink, and channel-inversion power
// control. Data sizes are normalized per Hz, so the bandwidth is usually 1.

#ifndef MECOFF_CHANNEL_H_
#define MECOFF_CHANNEL_H_

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mecoff/rng.h"

namespace mecoff {

// Thrown when a user's channel gain is below the deep-fading threshold.
class ExcludedUserError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class RadioParams {
 public:
  // Throws std::invalid_argument unless every argument is positive.
  RadioParams(double bandwidth, double noise_power, double bs_received_power,
              double user_received_power);

  // Convenience for SNR-parameterized setups: received powers are
  // gamma * noise_power.
  static RadioParams FromSnr(double bandwidth, double gamma_bs,
                             double gamma_user, double noise_power = 1.0);

  double bandwidth() const { return bandwidth_; }
  double noise_power() const { return noise_power_; }
  double bs_received_power() const { return bs_received_power_; }
  double user_received_power() const { return user_received_power_; }
  double gamma_bs() const { return gamma_bs_; }
  double gamma_user() const { return gamma_user_; }

  bool operator==(const RadioParams&) const = default;

 private:
  double bandwidth_;
  double noise_power_;
  double bs_received_power_;
  double user_received_power_;
  double gamma_bs_;
  double gamma_user_;
};

// Shifted-exponential fading: beta = epsilon + Exp(rate zeta), with
// zeta = 1 / (1 - epsilon) so that E[beta] = 1.
class FadingParams {
 public:
  explicit FadingParams(double epsilon = 0.05);

  double epsilon() const { return epsilon_; }
  double zeta() const { return zeta_; }

  bool operator==(const FadingParams&) const = default;

 private:
  double epsilon_;
  double zeta_;
};

// Per-user uplink rate W log2(1 + P_k b_k / (sum_{i in A, i != k} P_i b_i +
// N0)) for every user with offload[k] != 0. Entries for non-offloading users
// are NaN.
std::vector<double> UplinkRates(std::span<const std::uint8_t> offload,
                                std::span<const double> transmit_powers,
                                std::span<const double> betas,
                                const RadioParams& radio);

// Common uplink rate u(n) of n simultaneous offloaders under channel
// inversion. Requires n >= 1.
double UplinkRateInversion(int n, const RadioParams& radio);

// Downlink TDMA rate W log2(1 + gamma_user); the same for every user under
// channel inversion.
double DownlinkRate(const RadioParams& radio);

struct TransmitPowers {
  double uplink;    // P_k = P_BS / beta
  double downlink;  // Pbar_k = P_user / beta
};

// Throws ExcludedUserError when beta < fading.epsilon().
TransmitPowers InversionPowers(double beta, const RadioParams& radio,
                               const FadingParams& fading);

// One draw of the channel power gain; always >= epsilon.
double SampleFading(const FadingParams& fading, Rng& rng);

}  // namespace mecoff

#endif  // MECOFF_CHANNEL_H_
