// Copyright 2026 The qss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <random>

namespace qss {

/// SplitMix64 finalizer. A bijection on 64-bit words with full avalanche.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Per-trial random source.
///
/// Wraps std::mt19937_64 (whose output sequence is fixed by the standard) and
/// derives doubles, bits and bounded integers by hand instead of through the
/// <random> distributions, whose algorithms are implementation-defined. The
/// same seed therefore yields the same stream on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform double in [0, 1) with 53 bits of resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    int bit() { return static_cast<int>(engine_() >> 63); }

    /// Uniform integer in [0, bound). Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = engine_();
            if (x >= threshold) return x % bound;
        }
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace qss
