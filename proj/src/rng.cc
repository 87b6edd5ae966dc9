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

#include "mecoff/rng.h"

#include <bit>
#include <cmath>

namespace mecoff {

std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  return Mix64(state);
}

Rng::Rng(std::uint64_t seed) {
  std::uint64_t sm = seed;
  for (auto& word : s_) word = SplitMix64(sm);
}

Rng::result_type Rng::operator()() {
  const std::uint64_t result = std::rotl(s_[1] * 5, 7) * 9;
  const std::uint64_t t = s_[1] << 17;
  s_[2] ^= s_[0];
  s_[3] ^= s_[1];
  s_[1] ^= s_[2];
  s_[0] ^= s_[3];
  s_[2] ^= t;
  s_[3] = std::rotl(s_[3], 45);
  return result;
}

double Rng::NextUnit() {
  return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
}

double SampleExponential(Rng& rng, double mean) {
  // 1 - U lies in (0, 1], so the log is finite.
  return -mean * std::log1p(-rng.NextUnit());
}

double SampleUniform(Rng& rng, double lo, double hi) {
  return lo + (hi - lo) * rng.NextUnit();
}

std::uint64_t DeriveSeed(std::uint64_t base_seed, std::uint64_t value_index,
                         std::uint64_t trial) {
  return Mix64(Mix64(Mix64(base_seed) ^ value_index) ^ trial);
}

}  // namespace mecoff
