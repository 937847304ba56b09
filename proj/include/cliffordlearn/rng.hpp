// Copyright 2026 The cliffordlearn Authors
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

namespace cliffordlearn {

// All randomness flows through std::mt19937_64 streams derived from a single
// master seed. Helpers below avoid std::*_distribution so that identical
// seeds give identical draws on every platform.

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

// Independent stream for trial `trial` of a run seeded with `master_seed`.
inline std::mt19937_64 make_trial_rng(uint64_t master_seed, uint64_t trial) {
    return std::mt19937_64(splitmix64(splitmix64(master_seed) ^ (trial + 0x5851F42D4C957F2Dull)));
}

// Unbiased uniform draw from {0, ..., k-1}, k >= 1, by rejection.
inline uint64_t uniform_below(std::mt19937_64& rng, uint64_t k) {
    uint64_t threshold = (~k + 1) % k;  // 2^64 mod k
    for (;;) {
        uint64_t v = rng();
        if (v >= threshold) {
            return v % k;
        }
    }
}

inline bool random_bit(std::mt19937_64& rng) {
    return rng() >> 63;
}

// Uniform double in [0, 1) with 53 random bits.
inline double random_unit_double(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace cliffordlearn
