// Copyright 2026 The Authors.
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

#ifndef WSUB_RNG_HPP_
#define WSUB_RNG_HPP_

#include <cstdint>

namespace wsub {

// SplitMix64. Chosen over std::mt19937_64 + distributions because the
// standard distributions are implementation-defined; this generator produces
// the same stream on every platform, which the reproducibility contract
// (same seed => byte-identical trace) depends on.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Unbiased draw from {0, ..., bound-1} by rejection.
  std::uint32_t below(std::uint32_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x = next_u64();
    while (x >= limit) x = next_u64();
    return static_cast<std::uint32_t>(x % bound);
  }

  // Uniform double in [0, 1): top 53 bits of the stream.
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

 private:
  std::uint64_t state_;
};

// Per-trial seed derivation for Monte Carlo runs: trial i uses
// scramble(master + GOLDEN * (i + 1)), so trials are independent of
// scheduling order and may run concurrently.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 mix(master + 0x9e3779b97f4a7c15ULL * (index + 1));
  return mix.next_u64();
}

}  // namespace wsub

#endif  // WSUB_RNG_HPP_
