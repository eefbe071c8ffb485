// Copyright 2026 The covgeo Authors
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

#ifndef COVGEO_RNG_HPP
#define COVGEO_RNG_HPP

#include <cstdint>
#include <vector>

namespace covgeo {

// SplitMix64 (Steele, Lea, Flood 2014). Used instead of <random> engines and
// distributions because seeded runs must reproduce byte-identically across
// standard libraries; std::uniform_int_distribution is implementation-defined.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound); bound > 0. Rejection keeps it unbiased.
    uint64_t below(uint64_t bound) {
        uint64_t threshold = (0ULL - bound) % bound;
        while (true) {
            uint64_t r = next();
            if (r >= threshold) {
                return r % bound;
            }
        }
    }

    template <typename T>
    void shuffle(std::vector<T> &items) {
        for (size_t i = items.size(); i > 1; i--) {
            size_t j = static_cast<size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }
};

// Decorrelates per-iteration substreams from a user seed; iteration substreams
// can be evaluated in parallel and merged deterministically.
inline uint64_t substream_seed(uint64_t seed, uint64_t index) {
    return seed ^ (0x9E3779B97F4A7C15ULL * (index + 1));
}

}  // namespace covgeo

#endif  // COVGEO_RNG_HPP
