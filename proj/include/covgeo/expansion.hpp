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

#ifndef COVGEO_EXPANSION_HPP
#define COVGEO_EXPANSION_HPP

#include <map>
#include <stdexcept>
#include <string>
#include <utility>

#include "covgeo/bigmath.hpp"
#include "covgeo/metric.hpp"
#include "covgeo/pauli.hpp"

namespace covgeo {

// Real-rational linear combination of Pauli words. Elements of su(2^N) are
// written H = sum_I h_I E_I with E_I = i * (word I); the skew-Hermitian factor
// i is implicit, so all stored coefficients are exact rationals. With that
// bookkeeping, for anticommuting words [E_I, E_J] = 2 sigma E_K where K is the
// product word and sigma = -i^(s-1) in {-1, +1}, s being the i-power of the
// bare word product.
struct HermExpansion {
    int n_qubits = 0;
    std::map<PauliWord, Rational> terms;

    HermExpansion() = default;
    explicit HermExpansion(int n) : n_qubits(n) {
        if (n < 1 || n > 64) {
            throw std::invalid_argument("HermExpansion: n_qubits must be in [1, 64]");
        }
    }

    bool empty() const {
        return terms.empty();
    }

    void add_term(const PauliWord &word, const Rational &coefficient) {
        if (word.n_qubits != n_qubits) {
            throw std::invalid_argument("HermExpansion: word has wrong qubit count");
        }
        if (coefficient == 0) {
            return;
        }
        auto [it, inserted] = terms.emplace(word, coefficient);
        if (!inserted) {
            it->second += coefficient;
            if (it->second == 0) {
                terms.erase(it);
            }
        }
    }

    Rational coefficient_of(const PauliWord &word) const {
        auto it = terms.find(word);
        return it == terms.end() ? Rational(0) : it->second;
    }

    friend bool operator==(const HermExpansion &a, const HermExpansion &b) {
        return a.n_qubits == b.n_qubits && a.terms == b.terms;
    }
};

namespace detail {
// sigma such that [E_I, E_J] = 2 sigma E_(IJ) for anticommuting I, J.
inline int bracket_sign(const PauliWord &p, const PauliWord &q) {
    int s = product(p, q).phase_exp;  // always 1 or 3 for anticommuting words
    return s == 1 ? -1 : 1;
}
}  // namespace detail

// [H, E_k] extended linearly over the terms of h; exact.
inline HermExpansion bracket_expand(const HermExpansion &h, const PauliWord &k_word) {
    if (h.n_qubits != k_word.n_qubits) {
        throw std::invalid_argument("bracket_expand: dimension mismatch");
    }
    HermExpansion out(h.n_qubits);
    for (const auto &[word, coefficient] : h.terms) {
        if (commutes(word, k_word)) {
            continue;
        }
        PauliWord target = product(word, k_word).word;
        int sigma = detail::bracket_sign(word, k_word);
        out.add_term(target, coefficient * 2 * sigma);
    }
    return out;
}

// Bilinear extension of the bracket to a full expansion K.
inline HermExpansion bracket_expand(const HermExpansion &h, const HermExpansion &k) {
    if (h.n_qubits != k.n_qubits) {
        throw std::invalid_argument("bracket_expand: dimension mismatch");
    }
    HermExpansion out(h.n_qubits);
    for (const auto &[k_word, k_coefficient] : k.terms) {
        HermExpansion partial = bracket_expand(h, k_word);
        for (const auto &[word, coefficient] : partial.terms) {
            out.add_term(word, coefficient * k_coefficient);
        }
    }
    return out;
}

// Restriction to X-type words (letters 1 and X only). A tower element H has
// every term X-type; straight lines in the torus are geodesic precisely
// because this component of [H, K] vanishes for all K.
inline HermExpansion xtype_component(const HermExpansion &e) {
    HermExpansion out;
    out.n_qubits = e.n_qubits;
    for (const auto &[word, coefficient] : e.terms) {
        if (word.is_x_type()) {
            out.terms.emplace(word, coefficient);
        }
    }
    return out;
}

// <H, [H, K]> under the penalty metric: sum_I h_I m_I b^(2 w(I)) with
// m = [H, K] in the implicit-i convention above. Exact rational; identically
// zero whenever H lies in a single Cartan tower span.
inline Rational arnold_kheshin_rhs(const HermExpansion &h, const HermExpansion &k, const PenaltyMetric &metric) {
    if (h.n_qubits != k.n_qubits || h.n_qubits != metric.n_qubits) {
        throw std::invalid_argument("arnold_kheshin_rhs: dimension mismatch");
    }
    HermExpansion m = bracket_expand(h, k);
    Rational total = 0;
    for (const auto &[word, coefficient] : h.terms) {
        Rational m_coefficient = m.coefficient_of(word);
        if (m_coefficient != 0) {
            total += coefficient * m_coefficient * metric.squared_length(word);
        }
    }
    return total;
}

}  // namespace covgeo

#endif  // COVGEO_EXPANSION_HPP
