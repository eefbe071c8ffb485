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

#ifndef COVGEO_MAJORANA_HPP
#define COVGEO_MAJORANA_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "covgeo/pauli.hpp"

namespace covgeo {

// Monomial in the 2n Majorana generators, indexed by a bitvector in F_2^(2n):
// bit m-1 set means gamma_m appears. Text form is a 0/1 string of length 2n,
// leftmost character = gamma_1.
struct MajoranaString {
    int n_modes = 0;  // n; the string has 2n bits
    uint64_t bits = 0;

    MajoranaString() = default;
    MajoranaString(int n, uint64_t b) : n_modes(n), bits(b) {
        if (n < 1 || n > 32) {
            throw std::invalid_argument("MajoranaString: n_modes must be in [1, 32]");
        }
        uint64_t mask = (2 * n == 64) ? ~0ULL : ((1ULL << (2 * n)) - 1);
        if (b & ~mask) {
            throw std::invalid_argument("MajoranaString: bits exceed 2n");
        }
    }

    int weight() const {
        return std::popcount(bits);
    }

    friend bool operator==(const MajoranaString &a, const MajoranaString &b) {
        return a.n_modes == b.n_modes && a.bits == b.bits;
    }
    friend bool operator<(const MajoranaString &a, const MajoranaString &b) {
        return a.bits < b.bits;
    }
};

inline MajoranaString parse_majorana(const std::string &text) {
    if (text.empty() || text.size() % 2 != 0 || text.size() > 64) {
        throw std::invalid_argument("Majorana text must be a 0/1 string of even length <= 64");
    }
    uint64_t bits = 0;
    for (size_t i = 0; i < text.size(); i++) {
        if (text[i] == '1') {
            bits |= 1ULL << i;
        } else if (text[i] != '0') {
            throw std::invalid_argument("Majorana text must contain only 0 and 1");
        }
    }
    return MajoranaString(static_cast<int>(text.size() / 2), bits);
}

inline std::string render_majorana(const MajoranaString &m) {
    std::string out(static_cast<size_t>(2 * m.n_modes), '0');
    for (int i = 0; i < 2 * m.n_modes; i++) {
        if ((m.bits >> i) & 1) {
            out[static_cast<size_t>(i)] = '1';
        }
    }
    return out;
}

// Fixed Jordan-Wigner convention on n qubits:
//   gamma_(2k-1) = Z^(k-1) (x) X (x) 1...,   gamma_(2k) = Z^(k-1) (x) Y (x) 1...
// The image of a monomial is the ordered product of its generator images
// (ascending mode index), tracked with exact i-power phase. Multiplicative up
// to phase: jw(x) jw(y) = +/- i^s jw(x ^ y).
inline PhasedPauli jordan_wigner(const MajoranaString &m) {
    int n = m.n_modes;
    PhasedPauli acc{PauliWord::identity(n), 0, Rational(1)};
    for (int index = 0; index < 2 * n; index++) {
        if (!((m.bits >> index) & 1)) {
            continue;
        }
        int qubit = index / 2;  // zero-based; modes 2q+1, 2q+2 live on qubit q+1
        uint64_t z_prefix = (1ULL << qubit) - 1;
        uint64_t x = 1ULL << qubit;
        uint64_t z = z_prefix | ((index % 2 == 1) ? (1ULL << qubit) : 0);
        PhasedPauli gamma{PauliWord(n, x, z), 0, Rational(1)};
        PhasedPauli next = product(acc.word, gamma.word);
        acc = PhasedPauli{next.word, (acc.phase_exp + next.phase_exp) & 3, acc.coefficient};
    }
    return acc;
}

}  // namespace covgeo

#endif  // COVGEO_MAJORANA_HPP
