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

#include "mecoff/channel.h"

#include <cmath>
#include <limits>

#include <fmt/format.h>

namespace mecoff {

namespace {

void RequirePositive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw std::invalid_argument(
        fmt::format("{} must be positive and finite, got {}", name, value));
  }
}

}  // namespace

RadioParams::RadioParams(double bandwidth, double noise_power,
                         double bs_received_power, double user_received_power)
    : bandwidth_(bandwidth),
      noise_power_(noise_power),
      bs_received_power_(bs_received_power),
      user_received_power_(user_received_power),
      gamma_bs_(bs_received_power / noise_power),
      gamma_user_(user_received_power / noise_power) {
  RequirePositive(bandwidth, "W");
  RequirePositive(noise_power, "N0");
  RequirePositive(bs_received_power, "P_BS");
  RequirePositive(user_received_power, "P_user");
}

RadioParams RadioParams::FromSnr(double bandwidth, double gamma_bs,
                                 double gamma_user, double noise_power) {
  return RadioParams(bandwidth, noise_power, gamma_bs * noise_power,
                     gamma_user * noise_power);
}

FadingParams::FadingParams(double epsilon)
    : epsilon_(epsilon), zeta_(1.0 / (1.0 - epsilon)) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument(
        fmt::format("epsilon must lie in (0, 1), got {}", epsilon));
  }
}

std::vector<double> UplinkRates(std::span<const std::uint8_t> offload,
                                std::span<const double> transmit_powers,
                                std::span<const double> betas,
                                const RadioParams& radio) {
  const std::size_t k = offload.size();
  if (transmit_powers.size() != k || betas.size() != k) {
    throw std::invalid_argument(fmt::format(
        "dimension mismatch: {} decisions, {} powers, {} gains", k,
        transmit_powers.size(), betas.size()));
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!(transmit_powers[i] > 0.0) || !(betas[i] > 0.0)) {
      throw std::invalid_argument(
          fmt::format("user {}: power and gain must be positive", i));
    }
  }
  std::vector<double> rates(k, std::numeric_limits<double>::quiet_NaN());
  for (std::size_t i = 0; i < k; ++i) {
    if (!offload[i]) continue;
    const double signal = transmit_powers[i] * betas[i];
    // Summed directly rather than as total - signal to avoid cancellation.
    double interference = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i && offload[j]) interference += transmit_powers[j] * betas[j];
    }
    rates[i] = radio.bandwidth() *
               std::log2(1.0 + signal / (interference + radio.noise_power()));
  }
  return rates;
}

double UplinkRateInversion(int n, const RadioParams& radio) {
  if (n < 1) {
    throw std::invalid_argument(
        fmt::format("uplink rate needs at least one offloader, got n={}", n));
  }
  const double g = radio.gamma_bs();
  return radio.bandwidth() * std::log2(1.0 + g / ((n - 1) * g + 1.0));
}

double DownlinkRate(const RadioParams& radio) {
  return radio.bandwidth() * std::log2(1.0 + radio.gamma_user());
}

TransmitPowers InversionPowers(double beta, const RadioParams& radio,
                               const FadingParams& fading) {
  if (!(beta >= fading.epsilon())) {
    throw ExcludedUserError(fmt::format(
        "channel gain {} is below the deep-fading threshold {}", beta,
        fading.epsilon()));
  }
  return {radio.bs_received_power() / beta,
          radio.user_received_power() / beta};
}

double SampleFading(const FadingParams& fading, Rng& rng) {
  return fading.epsilon() + SampleExponential(rng, 1.0 / fading.zeta());
}

}  // namespace mecoff
