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

// Exact cost evaluation of an offloading decision, and the per-cardinality
// linearization that turns the energy/time model into a BILP.
//
// Two time models coexist:
//  * the literal model, where the uplink phase lasts max_{k offloads} L_k/u(n);
//  * the linearized model, which charges L_max/u(n) with L_max taken over all
//    K users. It is exact whenever the offloading set contains a user with the
//    largest L, and an upper bound otherwise.
// Energy has no such split: e_k(n) does not depend on who else offloads.

#ifndef MECOFF_ENERGY_TIME_H_
#define MECOFF_ENERGY_TIME_H_

#include <cstdint>
#include <span>
#include <vector>

#include "mecoff/task_model.h"

namespace mecoff {

class DecisionVector {
 public:
  DecisionVector() = default;
  // Every entry must be 0 or 1; throws std::invalid_argument otherwise.
  explicit DecisionVector(std::vector<std::uint8_t> bits);

  static DecisionVector Zeros(std::size_t k);
  static DecisionVector Ones(std::size_t k);

  std::size_t size() const { return bits_.size(); }
  int count() const { return count_; }
  bool offloads(std::size_t k) const { return bits_[k] != 0; }
  std::span<const std::uint8_t> bits() const { return bits_; }

  bool operator==(const DecisionVector&) const = default;

 private:
  std::vector<std::uint8_t> bits_;
  int count_ = 0;
};

struct CostBreakdown {
  double total_energy = 0.0;
  double total_time = 0.0;
  double uplink_time = 0.0;
  std::vector<double> per_user_energy;
  std::vector<double> per_user_downlink_time;
};

struct LinearCoefficients {
  int n = 0;
  double base_energy = 0.0;  // E0
  double base_time = 0.0;    // T0(n) = L_max/u(n) + sum_k B_k/v
  std::vector<double> energy_coeffs;  // e_k(n)
  std::vector<double> time_coeffs;    // d_k = (Y_k - B_k)/v
};

// Literal-model evaluation. Throws std::invalid_argument if the decision
// length differs from the number of users.
CostBreakdown Evaluate(const Scenario& scenario, const DecisionVector& a);
double TotalTime(const Scenario& scenario, const DecisionVector& a);
double TotalEnergy(const Scenario& scenario, const DecisionVector& a);

// Requires 1 <= n <= K.
LinearCoefficients Linearize(const Scenario& scenario, int n);

// Sum of coeffs over the selected users, accumulated in index order. Every
// solver in the project uses this so objective comparisons are bit-exact.
double SelectedSum(std::span<const double> coeffs,
                   std::span<const std::uint8_t> bits);

// T0(n) + d^T a with n = |a|; equals the literal total time when no offloader
// is present (n = 0).
double LinearizedTime(const Scenario& scenario, const DecisionVector& a);

}  // namespace mecoff

#endif  // MECOFF_ENERGY_TIME_H_
