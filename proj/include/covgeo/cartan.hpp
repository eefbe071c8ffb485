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

#ifndef COVGEO_CARTAN_HPP
#define COVGEO_CARTAN_HPP

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "covgeo/bigmath.hpp"
#include "covgeo/pauli.hpp"

namespace covgeo {

// Level-k member of the nested Cartan tower: all X-type words of weight 1..k.
// X-type words commute pairwise (no position mixes distinct non-identity
// letters), so each basis spans a torus of dimension F(k, N).
struct CartanTower {
    int n_qubits = 0;
    int level = 0;
    std::vector<PauliWord> basis;
};

// Basis ordered by (weight ascending, then lexicographic on the text form),
// which makes the level-(k-1) basis a prefix of the level-k basis.
inline CartanTower cartan_tower(int n_qubits, int level) {
    if (n_qubits < 1 || n_qubits > 32) {
        throw std::invalid_argument("cartan_tower: n_qubits must be in [1, 32]");
    }
    if (level < 1 || level > n_qubits) {
        throw std::domain_error("cartan_tower: level must be in [1, n_qubits]");
    }
    CartanTower tower;
    tower.n_qubits = n_qubits;
    tower.level = level;
    for (int w = 1; w <= level; w++) {
        std::vector<std::string> texts;
        // Enumerate weight-w X-masks by walking combinations of set positions.
        std::vector<int> positions(static_cast<size_t>(w));
        for (int i = 0; i < w; i++) {
            positions[static_cast<size_t>(i)] = i;
        }
        while (true) {
            uint64_t mask = 0;
            for (int p : positions) {
                mask |= 1ULL << p;
            }
            texts.push_back(render_word(PauliWord(n_qubits, mask, 0)));
            int i = w - 1;
            while (i >= 0 && positions[static_cast<size_t>(i)] == n_qubits - w + i) {
                i--;
            }
            if (i < 0) {
                break;
            }
            positions[static_cast<size_t>(i)]++;
            for (int j = i + 1; j < w; j++) {
                positions[static_cast<size_t>(j)] = positions[static_cast<size_t>(j - 1)] + 1;
            }
        }
        std::sort(texts.begin(), texts.end());
        for (const std::string &t : texts) {
            tower.basis.push_back(parse_word(t));
        }
    }
    return tower;
}

}  // namespace covgeo

#endif  // COVGEO_CARTAN_HPP
