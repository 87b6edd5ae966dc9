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

#include "mecoff/energy_time.h"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

#include "mecoff/channel.h"

namespace mecoff {

DecisionVector::DecisionVector(std::vector<std::uint8_t> bits)
    : bits_(std::move(bits)) {
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    if (bits_[k] > 1) {
      throw std::invalid_argument(
          fmt::format("decision entry {} is {}, expected 0 or 1", k,
                      static_cast<int>(bits_[k])));
    }
    count_ += bits_[k];
  }
}

DecisionVector DecisionVector::Zeros(std::size_t k) {
  return DecisionVector(std::vector<std::uint8_t>(k, 0));
}

DecisionVector DecisionVector::Ones(std::size_t k) {
  return DecisionVector(std::vector<std::uint8_t>(k, 1));
}

CostBreakdown Evaluate(const Scenario& scenario, const DecisionVector& a) {
  const std::size_t k_users = scenario.size();
  if (a.size() != k_users) {
    throw std::invalid_argument(fmt::format(
        "decision has {} entries for {} users", a.size(), k_users));
  }
  const SystemConfig& cfg = scenario.config;
  const double v = DownlinkRate(cfg.radio);
  const int n = a.count();
  const double u = n > 0 ? UplinkRateInversion(n, cfg.radio) : 0.0;

  CostBreakdown out;
  out.per_user_energy.resize(k_users);
  out.per_user_downlink_time.resize(k_users);
  for (std::size_t k = 0; k < k_users; ++k) {
    const UserTask& user = scenario.users[k];
    const TransmitPowers p = InversionPowers(user.gain, cfg.radio, cfg.fading);
    if (a.offloads(k)) {
      out.uplink_time = std::max(out.uplink_time, user.local_bits / u);
      out.per_user_downlink_time[k] = user.output_bits / v;
      out.per_user_energy[k] = cfg.server_energy_per_cycle * user.cycles +
                               p.uplink * user.local_bits / u +
                               p.downlink * user.output_bits / v;
    } else {
      out.per_user_downlink_time[k] = user.server_bits / v;
      out.per_user_energy[k] = user.energy_per_cycle * user.cycles +
                               p.downlink * user.server_bits / v;
    }
  }
  out.total_time = out.uplink_time;
  for (std::size_t k = 0; k < k_users; ++k) {
    out.total_energy += out.per_user_energy[k];
    out.total_time += out.per_user_downlink_time[k];
  }
  return out;
}

double TotalTime(const Scenario& scenario, const DecisionVector& a) {
  return Evaluate(scenario, a).total_time;
}

double TotalEnergy(const Scenario& scenario, const DecisionVector& a) {
  return Evaluate(scenario, a).total_energy;
}

LinearCoefficients Linearize(const Scenario& scenario, int n) {
  const int k_users = static_cast<int>(scenario.size());
  if (n < 1 || n > k_users) {
    throw std::invalid_argument(
        fmt::format("linearize: n={} outside [1, {}]", n, k_users));
  }
  const SystemConfig& cfg = scenario.config;
  const double v = DownlinkRate(cfg.radio);
  const double u = UplinkRateInversion(n, cfg.radio);
  const double p_bs = cfg.radio.bs_received_power();
  const double p_user = cfg.radio.user_received_power();

  LinearCoefficients lc;
  lc.n = n;
  lc.energy_coeffs.resize(k_users);
  lc.time_coeffs.resize(k_users);
  double max_local = 0.0;
  double server_total = 0.0;
  for (int k = 0; k < k_users; ++k) {
    const UserTask& user = scenario.users[k];
    // Validates the gain; the powers themselves are folded in below.
    InversionPowers(user.gain, cfg.radio, cfg.fading);
    max_local = std::max(max_local, user.local_bits);
    server_total += user.server_bits;
    lc.base_energy += user.energy_per_cycle * user.cycles +
                      p_user * user.server_bits / (user.gain * v);
    lc.energy_coeffs[k] =
        (cfg.server_energy_per_cycle - user.energy_per_cycle) * user.cycles +
        p_bs * user.local_bits / (user.gain * u) +
        p_user * (user.output_bits - user.server_bits) / (user.gain * v);
    lc.time_coeffs[k] = (user.output_bits - user.server_bits) / v;
  }
  lc.base_time = max_local / u + server_total / v;
  return lc;
}

double SelectedSum(std::span<const double> coeffs,
                   std::span<const std::uint8_t> bits) {
  double sum = 0.0;
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    if (bits[k]) sum += coeffs[k];
  }
  return sum;
}

double LinearizedTime(const Scenario& scenario, const DecisionVector& a) {
  if (a.count() == 0) return TotalTime(scenario, a);
  const LinearCoefficients lc = Linearize(scenario, a.count());
  return lc.base_time + SelectedSum(lc.time_coeffs, a.bits());
}

}  // namespace mecoff
