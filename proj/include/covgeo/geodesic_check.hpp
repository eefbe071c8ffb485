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

#ifndef COVGEO_GEODESIC_CHECK_HPP
#define COVGEO_GEODESIC_CHECK_HPP

#include <cstdint>
#include <stdexcept>

#include "covgeo/cartan.hpp"
#include "covgeo/expansion.hpp"
#include "covgeo/metric.hpp"
#include "covgeo/rng.hpp"

namespace covgeo {

struct GeodesicCheckReport {
    int n_qubits = 0;
    int level = 0;
    Rational b;
    int samples = 0;
    int passed = 0;
    uint64_t seed = 0;

    bool all_passed() const {
        return passed == samples;
    }
};

// Randomized witness that straight lines in the level-k torus are geodesic:
// for random tower elements H and random perturbations K, [H, K] must have no
// X-type component and the quadratic pairing <H, [H, K]> must vanish exactly.
// Both checks are exact-rational, so a pass is a proof for that sample, and a
// single failure would falsify the totally-geodesic property. Sample s draws
// from substream_seed(seed, s), making the loop order irrelevant.
inline GeodesicCheckReport verify_tower_geodesic(int n_qubits, int level, const Rational &b,
                                                 int samples, uint64_t seed) {
    if (samples < 1) {
        throw std::domain_error("verify_tower_geodesic: samples must be positive");
    }
    CartanTower tower = cartan_tower(n_qubits, level);
    PenaltyMetric metric(n_qubits, b);
    GeodesicCheckReport report;
    report.n_qubits = n_qubits;
    report.level = level;
    report.b = b;
    report.samples = samples;
    report.seed = seed;

    uint64_t side = 1ULL << n_qubits;
    for (int s = 0; s < samples; s++) {
        SplitMix64 rng(substream_seed(seed, static_cast<uint64_t>(s)));
        HermExpansion h(n_qubits);
        for (const PauliWord &w : tower.basis) {
            int64_t numerator = static_cast<int64_t>(rng.below(19)) - 9;
            int64_t denominator = static_cast<int64_t>(rng.below(4)) + 1;
            h.add_term(w, Rational(numerator, denominator));
        }
        HermExpansion k(n_qubits);
        for (int t = 0; t < 4; t++) {
            PauliWord w(n_qubits, rng.below(side), rng.below(side));
            if (w.is_identity()) {
                continue;
            }
            int64_t numerator = static_cast<int64_t>(rng.below(19)) - 9;
            k.add_term(w, Rational(numerator, 3));
        }
        bool ok = xtype_component(bracket_expand(h, k)).empty() &&
                  arnold_kheshin_rhs(h, k, metric) == 0;
        if (ok) {
            report.passed++;
        }
    }
    return report;
}

}  // namespace covgeo

#endif  // COVGEO_GEODESIC_CHECK_HPP
