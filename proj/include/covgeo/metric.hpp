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

#ifndef COVGEO_METRIC_HPP
#define COVGEO_METRIC_HPP

#include <stdexcept>
#include <string>

#include "covgeo/bigmath.hpp"
#include "covgeo/pauli.hpp"

namespace covgeo {

// Diagonal right-invariant penalty metric on su(2^N): the word direction I
// carries squared length b^(2 w(I)). b is held as an exact rational so every
// quantity downstream of an integer or decimal b stays exact.
struct PenaltyMetric {
    int n_qubits;
    Rational base_b;

    PenaltyMetric(int n, const Rational &b) : n_qubits(n), base_b(b) {
        if (n < 1) {
            throw std::invalid_argument("PenaltyMetric: n_qubits must be positive");
        }
        if (!(b > 1)) {
            throw std::domain_error("PenaltyMetric: base b must exceed 1");
        }
    }

    static PenaltyMetric from_decimal(int n, const std::string &b_text) {
        return PenaltyMetric(n, parse_decimal_rational(b_text));
    }

    Rational squared_length(const PauliWord &word) const {
        if (word.n_qubits != n_qubits) {
            throw std::invalid_argument("PenaltyMetric: word has wrong qubit count");
        }
        return pow_rational(base_b, 2 * weight(word));
    }

    double base_as_double() const {
        return to_double(base_b);
    }
};

}  // namespace covgeo

#endif  // COVGEO_METRIC_HPP
