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
//
// Independent dense-matrix oracle for the symplectic Pauli algebra. Entries
// are exact Gaussian integers: every Pauli word matrix, every product of two
// of them, and every commutator has entries in {0, +/-1, +/-2, +/-i, +/-2i},
// so the comparison against the bitwise path is bit-exact, no tolerances.

#ifndef COVGEO_TESTS_DENSE_PAULI_HPP
#define COVGEO_TESTS_DENSE_PAULI_HPP

#include <cstdint>
#include <vector>

#include "covgeo/majorana.hpp"
#include "covgeo/pauli.hpp"

namespace covgeo::testing {

struct GaussInt {
    int64_t re = 0;
    int64_t im = 0;

    friend GaussInt operator+(GaussInt a, GaussInt b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussInt operator-(GaussInt a, GaussInt b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend GaussInt operator*(GaussInt a, GaussInt b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(GaussInt a, GaussInt b) {
        return a.re == b.re && a.im == b.im;
    }
};

using DenseMat = std::vector<std::vector<GaussInt>>;

inline DenseMat single_qubit_matrix(int letter_code) {
    // letter code x | z << 1: 0 -> 1, 1 -> X, 2 -> Z, 3 -> Y
    switch (letter_code) {
        case 0:
            return {{{1, 0}, {0, 0}}, {{0, 0}, {1, 0}}};
        case 1:
            return {{{0, 0}, {1, 0}}, {{1, 0}, {0, 0}}};
        case 2:
            return {{{1, 0}, {0, 0}}, {{0, 0}, {-1, 0}}};
        default:
            return {{{0, 0}, {0, -1}}, {{0, 1}, {0, 0}}};
    }
}

inline DenseMat kron(const DenseMat &a, const DenseMat &b) {
    size_t ra = a.size(), ca = a[0].size(), rb = b.size(), cb = b[0].size();
    DenseMat out(ra * rb, std::vector<GaussInt>(ca * cb));
    for (size_t i = 0; i < ra; i++) {
        for (size_t j = 0; j < ca; j++) {
            for (size_t p = 0; p < rb; p++) {
                for (size_t q = 0; q < cb; q++) {
                    out[i * rb + p][j * cb + q] = a[i][j] * b[p][q];
                }
            }
        }
    }
    return out;
}

// Dense matrix of a Pauli word; qubit 1 is the leftmost Kronecker factor.
inline DenseMat word_matrix(const PauliWord &word) {
    DenseMat out = {{{1, 0}}};
    for (int q = 0; q < word.n_qubits; q++) {
        int code = static_cast<int>((word.x_bits >> q) & 1) |
                   (static_cast<int>((word.z_bits >> q) & 1) << 1);
        out = kron(out, single_qubit_matrix(code));
    }
    return out;
}

inline DenseMat mat_mul(const DenseMat &a, const DenseMat &b) {
    size_t n = a.size();
    DenseMat out(n, std::vector<GaussInt>(n));
    for (size_t i = 0; i < n; i++) {
        for (size_t k = 0; k < n; k++) {
            GaussInt aik = a[i][k];
            if (aik == GaussInt{}) {
                continue;
            }
            for (size_t j = 0; j < n; j++) {
                out[i][j] = out[i][j] + aik * b[k][j];
            }
        }
    }
    return out;
}

inline DenseMat mat_sub(const DenseMat &a, const DenseMat &b) {
    DenseMat out = a;
    for (size_t i = 0; i < a.size(); i++) {
        for (size_t j = 0; j < a.size(); j++) {
            out[i][j] = a[i][j] - b[i][j];
        }
    }
    return out;
}

inline bool mat_is_zero(const DenseMat &a) {
    for (const auto &row : a) {
        for (GaussInt v : row) {
            if (!(v == GaussInt{})) {
                return false;
            }
        }
    }
    return true;
}

inline bool mat_equal(const DenseMat &a, const DenseMat &b) {
    return mat_is_zero(mat_sub(a, b));
}

inline GaussInt i_power(int exponent) {
    switch (((exponent % 4) + 4) % 4) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

inline DenseMat scaled(const DenseMat &a, GaussInt s) {
    DenseMat out = a;
    for (auto &row : out) {
        for (GaussInt &v : row) {
            v = v * s;
        }
    }
    return out;
}

// Matrix of coefficient * i^phase * word; the coefficient must be an integer
// (the oracle is only used on integer-coefficient results).
inline DenseMat phased_matrix(const PhasedPauli &p) {
    if (boost::multiprecision::denominator(p.coefficient) != 1) {
        throw std::logic_error("phased_matrix: non-integer coefficient");
    }
    int64_t c = boost::multiprecision::numerator(p.coefficient).convert_to<int64_t>();
    return scaled(word_matrix(p.word), i_power(p.phase_exp) * GaussInt{c, 0});
}

inline bool matrices_commute(const DenseMat &a, const DenseMat &b) {
    return mat_equal(mat_mul(a, b), mat_mul(b, a));
}

inline bool matrices_anticommute(const DenseMat &a, const DenseMat &b) {
    DenseMat ab = mat_mul(a, b);
    DenseMat ba = mat_mul(b, a);
    for (size_t i = 0; i < ab.size(); i++) {
        for (size_t j = 0; j < ab.size(); j++) {
            if (!(ab[i][j] + ba[i][j] == GaussInt{})) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace covgeo::testing

#endif  // COVGEO_TESTS_DENSE_PAULI_HPP
