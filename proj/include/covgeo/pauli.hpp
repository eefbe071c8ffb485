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

#ifndef COVGEO_PAULI_HPP
#define COVGEO_PAULI_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>

#include "covgeo/bigmath.hpp"

namespace covgeo {

// N-qubit Pauli word in the symplectic bit representation: qubit q holds the
// letter encoded by (x_bit, z_bit) = (0,0) -> 1, (1,0) -> X, (1,1) -> Y,
// (0,1) -> Z. Bit q-1 of each mask is qubit q; qubit 1 is the leftmost symbol
// of the text form ("XZ1" = X on qubit 1, Z on qubit 2).
struct PauliWord {
    int n_qubits = 0;
    uint64_t x_bits = 0;
    uint64_t z_bits = 0;

    PauliWord() = default;
    PauliWord(int n, uint64_t x, uint64_t z) : n_qubits(n), x_bits(x), z_bits(z) {
        if (n < 1 || n > 64) {
            throw std::invalid_argument("PauliWord: n_qubits must be in [1, 64]");
        }
        uint64_t mask = n == 64 ? ~0ULL : ((1ULL << n) - 1);
        if ((x & ~mask) || (z & ~mask)) {
            throw std::invalid_argument("PauliWord: bits exceed n_qubits");
        }
    }

    static PauliWord identity(int n) {
        return PauliWord(n, 0, 0);
    }

    bool is_identity() const {
        return x_bits == 0 && z_bits == 0;
    }

    // X-type words use letters 1 and X only; they span the Cartan tori.
    bool is_x_type() const {
        return z_bits == 0;
    }

    friend bool operator==(const PauliWord &a, const PauliWord &b) {
        return a.n_qubits == b.n_qubits && a.x_bits == b.x_bits && a.z_bits == b.z_bits;
    }

    friend bool operator<(const PauliWord &a, const PauliWord &b) {
        return std::tie(a.n_qubits, a.x_bits, a.z_bits) < std::tie(b.n_qubits, b.x_bits, b.z_bits);
    }
};

inline void require_same_dimension(const PauliWord &p, const PauliWord &q) {
    if (p.n_qubits != q.n_qubits) {
        throw std::invalid_argument("Pauli words act on different qubit counts");
    }
}

inline int weight(const PauliWord &p) {
    return std::popcount(p.x_bits | p.z_bits);
}

inline bool commutes(const PauliWord &p, const PauliWord &q) {
    require_same_dimension(p, q);
    int crossings = std::popcount(p.x_bits & q.z_bits) + std::popcount(p.z_bits & q.x_bits);
    return (crossings & 1) == 0;
}

// Scalar-phased rational multiple of a word: coefficient * i^phase_exp * word.
// Coefficient 0 is the canonical zero regardless of word and phase.
struct PhasedPauli {
    PauliWord word;
    int phase_exp = 0;  // mod 4
    Rational coefficient = 0;

    static PhasedPauli zero(int n) {
        return PhasedPauli{PauliWord::identity(n), 0, Rational(0)};
    }

    bool is_zero() const {
        return coefficient == 0;
    }

    PhasedPauli negated() const {
        if (is_zero()) {
            return *this;
        }
        return PhasedPauli{word, (phase_exp + 2) & 3, coefficient};
    }

    friend bool operator==(const PhasedPauli &a, const PhasedPauli &b) {
        if (a.is_zero() && b.is_zero()) {
            return true;
        }
        return a.word == b.word && a.phase_exp == b.phase_exp && a.coefficient == b.coefficient;
    }
};

namespace detail {
// i-power contributed by a single-qubit product, indexed by the letter code
// x | (z << 1): 0 -> 1, 1 -> X, 2 -> Z, 3 -> Y. Cyclic products (X.Y, Y.Z,
// Z.X) give +i; anticyclic give -i (exponent 3).
inline constexpr int kProductPhase[4][4] = {
    {0, 0, 0, 0},
    {0, 0, 3, 1},
    {0, 1, 0, 3},
    {0, 3, 1, 0},
};

inline int letter_code(const PauliWord &p, int qubit) {
    return static_cast<int>((p.x_bits >> qubit) & 1) | (static_cast<int>((p.z_bits >> qubit) & 1) << 1);
}
}  // namespace detail

// Exact operator product p * q = i^phase_exp * word, coefficient 1.
inline PhasedPauli product(const PauliWord &p, const PauliWord &q) {
    require_same_dimension(p, q);
    int phase = 0;
    uint64_t both = (p.x_bits | p.z_bits) & (q.x_bits | q.z_bits);
    for (uint64_t m = both; m; m &= m - 1) {
        int qubit = std::countr_zero(m);
        phase += detail::kProductPhase[detail::letter_code(p, qubit)][detail::letter_code(q, qubit)];
    }
    PauliWord w(p.n_qubits, p.x_bits ^ q.x_bits, p.z_bits ^ q.z_bits);
    return PhasedPauli{w, phase & 3, Rational(1)};
}

// [P, Q] = PQ - QP: zero when the words commute, otherwise exactly twice the
// product (QP = -PQ for anticommuting words).
inline PhasedPauli bracket(const PauliWord &p, const PauliWord &q) {
    require_same_dimension(p, q);
    if (commutes(p, q)) {
        return PhasedPauli::zero(p.n_qubits);
    }
    PhasedPauli pq = product(p, q);
    pq.coefficient = 2;
    return pq;
}

// Text form: one symbol per qubit over {1, I, X, Y, Z}, 1 and I synonyms,
// leftmost symbol = qubit 1. Rendering uses '1'.
inline PauliWord parse_word(const std::string &text) {
    if (text.empty() || text.size() > 64) {
        throw std::invalid_argument("Pauli word text must have 1..64 symbols");
    }
    uint64_t x = 0;
    uint64_t z = 0;
    for (size_t q = 0; q < text.size(); q++) {
        switch (text[q]) {
            case '1':
            case 'I':
                break;
            case 'X':
                x |= 1ULL << q;
                break;
            case 'Y':
                x |= 1ULL << q;
                z |= 1ULL << q;
                break;
            case 'Z':
                z |= 1ULL << q;
                break;
            default:
                throw std::invalid_argument(std::string("bad Pauli letter '") + text[q] + "'");
        }
    }
    return PauliWord(static_cast<int>(text.size()), x, z);
}

inline std::string render_word(const PauliWord &p) {
    static constexpr char kLetters[4] = {'1', 'X', 'Z', 'Y'};
    std::string out(static_cast<size_t>(p.n_qubits), '1');
    for (int q = 0; q < p.n_qubits; q++) {
        out[static_cast<size_t>(q)] = kLetters[detail::letter_code(p, q)];
    }
    return out;
}

// Dense index in [0, 4^N): x_bits | z_bits << N. Requires N <= 32.
inline uint64_t word_index(const PauliWord &p) {
    if (p.n_qubits > 32) {
        throw std::domain_error("word_index: n_qubits > 32");
    }
    return p.x_bits | (p.z_bits << p.n_qubits);
}

inline PauliWord word_from_index(int n_qubits, uint64_t index) {
    uint64_t mask = (1ULL << n_qubits) - 1;
    return PauliWord(n_qubits, index & mask, (index >> n_qubits) & mask);
}

}  // namespace covgeo

#endif  // COVGEO_PAULI_HPP
