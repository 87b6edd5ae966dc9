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

#ifndef MECOFF_RNG_H_
#define MECOFF_RNG_H_

#include <array>
#include <cstdint>
#include <limits>

namespace mecoff {

// SplitMix64 finalizer. Used both to expand a 64-bit seed into xoshiro state
// and to derive per-trial seeds.
std::uint64_t SplitMix64(std::uint64_t& state);
std::uint64_t Mix64(std::uint64_t x);

// xoshiro256** 1.0 (Blackman & Vigna). The state is filled from the seed by
// four successive SplitMix64 draws, so a given seed produces the same stream
// on every platform. Satisfies UniformRandomBitGenerator, but all sampling in
// this project goes through the helpers below rather than <random>
// distributions, whose algorithms are implementation-defined.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(std::uint64_t seed);

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()();

  // Uniform double in [0, 1) with 53 random mantissa bits.
  double NextUnit();

 private:
  std::array<std::uint64_t, 4> s_;
};

// Exponential with the given mean, by inverse CDF: -mean * ln(1 - U).
double SampleExponential(Rng& rng, double mean);

// Uniform on [lo, hi).
double SampleUniform(Rng& rng, double lo, double hi);

// Seed for trial `trial` of grid point `value_index` under `base_seed`:
// Mix64(Mix64(Mix64(base_seed) ^ value_index) ^ trial). Independent of the
// order in which trials are executed.
std::uint64_t DeriveSeed(std::uint64_t base_seed, std::uint64_t value_index,
                         std::uint64_t trial);

}  // namespace mecoff

#endif  // MECOFF_RNG_H_
