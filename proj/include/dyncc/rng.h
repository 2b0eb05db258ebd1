// Copyright 2026 The dyncc Authors
//
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

#ifndef DYNCC_RNG_H_
#define DYNCC_RNG_H_

#include <cstdint>
#include <stdexcept>

namespace dyncc {

// A probability num/den with 0 <= num <= den, den >= 1. Exact, so generated
// workloads are reproducible bit-for-bit from their parameters.
struct Probability {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  Probability() = default;
  Probability(std::uint64_t n, std::uint64_t d) : num(n), den(d) {
    if (d < 1 || n > d)
      throw std::invalid_argument("probability must satisfy 0 <= num <= den");
  }
  friend bool operator==(const Probability&, const Probability&) = default;
};

// SplitMix64 (Steele, Lea & Flood): the state advances by the golden-ratio
// increment and each output is a finalizer of the new state. Chosen as the
// workload generator because the algorithm is a published one-liner, so any
// reimplementation reproduces the exact same streams from a seed.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [0, bound), bound >= 1. Plain modulo: the tiny bias
  // is irrelevant for test workloads and keeps the stream portable.
  std::uint64_t NextBelow(std::uint64_t bound) { return Next() % bound; }

  bool Bernoulli(const Probability& p) { return NextBelow(p.den) < p.num; }

 private:
  std::uint64_t state_;
};

}  // namespace dyncc

#endif  // DYNCC_RNG_H_
