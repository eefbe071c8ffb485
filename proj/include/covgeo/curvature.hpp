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

#ifndef COVGEO_CURVATURE_HPP
#define COVGEO_CURVATURE_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "covgeo/bigmath.hpp"
#include "covgeo/covering.hpp"
#include "covgeo/expansion.hpp"
#include "covgeo/pauli.hpp"

namespace covgeo {

// Orthonormal frame for the penalty metric: f_I = E_I / b^w(I). All curvature
// data below lives in this frame, where the structure constants are
//   alpha_{IJK} = <[f_I, f_J], f_K> = 2 sigma b^(w_K - w_I - w_J)
// on anticommuting pairs (K the product word, sigma from the phase table) and
// zero otherwise. Everything is exact-rational until the final conversion.
struct StructureConstants {
    int n_qubits = 0;
    Rational b;
    std::vector<PauliWord> words;  // all 4^N - 1 non-identity words, (weight, text) order
    std::vector<int> weights;
    std::vector<size_t> position_of;  // word_index -> position in `words`

    struct Entry {
        size_t target;   // K with [f_I, f_J] proportional to f_K
        Rational value;  // alpha_{IJK}
    };
    std::map<std::pair<size_t, size_t>, Entry> entries;

    size_t dimension() const {
        return words.size();
    }

    // alpha_{ij, target}: the (i, j) entry projected on a specific K; zero
    // unless the bracket lands exactly on that word.
    Rational alpha(size_t i, size_t j, size_t target) const {
        auto it = entries.find({i, j});
        if (it == entries.end() || it->second.target != target) {
            return Rational(0);
        }
        return it->second.value;
    }
};

inline StructureConstants structure_constants(int n_qubits, const Rational &b) {
    if (n_qubits < 1 || n_qubits > 4) {
        throw std::domain_error("structure_constants: N capped at 4 (dimension 255)");
    }
    if (!(b > 0)) {
        throw std::domain_error("structure_constants: base b must be positive");
    }
    StructureConstants sc;
    sc.n_qubits = n_qubits;
    sc.b = b;

    std::vector<std::pair<std::pair<int, std::string>, PauliWord>> ordered;
    uint64_t total = 1ULL << (2 * n_qubits);
    for (uint64_t index = 1; index < total; index++) {
        PauliWord w = word_from_index(n_qubits, index);
        ordered.push_back({{weight(w), render_word(w)}, w});
    }
    std::sort(ordered.begin(), ordered.end(),
              [](const auto &a, const auto &b2) { return a.first < b2.first; });
    sc.position_of.assign(total, 0);
    for (size_t pos = 0; pos < ordered.size(); pos++) {
        sc.words.push_back(ordered[pos].second);
        sc.weights.push_back(ordered[pos].first.first);
        sc.position_of[word_index(ordered[pos].second)] = pos;
    }

    for (size_t i = 0; i < sc.words.size(); i++) {
        for (size_t j = i + 1; j < sc.words.size(); j++) {
            if (commutes(sc.words[i], sc.words[j])) {
                continue;
            }
            PhasedPauli p = product(sc.words[i], sc.words[j]);
            size_t k = sc.position_of[word_index(p.word)];
            int sigma = p.phase_exp == 1 ? -1 : 1;  // [E_I, E_J] = 2 sigma E_K
            Rational value = 2 * sigma * pow_rational(b, sc.weights[k] - sc.weights[i] - sc.weights[j]);
            sc.entries[{i, j}] = {k, value};
            sc.entries[{j, i}] = {k, -value};
        }
    }
    return sc;
}

struct RicciSpectrum {
    int n_qubits = 0;
    Rational b;
    size_t dimension = 0;  // 4^N - 1
    std::vector<PauliWord> words;
    std::vector<int> weights;
    std::vector<Rational> diagonal_exact;
    std::vector<double> diagonal_values;
    Rational lambda_min_exact;
    Rational lambda_max_exact;
    double lambda_min = 0;
    double lambda_max = 0;
    double max_offdiagonal = 0;  // verified, not assumed
};

namespace detail {
// Koszul coefficient Gamma_{ijk} = (alpha_{ijk} - alpha_{jki} + alpha_{kij})/2
// with every alpha routed through the projected accessor, so closure of the
// triple is checked rather than presumed.
inline Rational gamma_coefficient(const StructureConstants &sc, size_t i, size_t j, size_t k) {
    return (sc.alpha(i, j, k) - sc.alpha(j, k, i) + sc.alpha(k, i, j)) / 2;
}
}  // namespace detail

// Ricci quadratic form in the orthonormal frame. Diagonal entries are exact
// sums over anticommuting partners:
//   Ric(f_a, f_a) = sum_i [ -Gamma_{iak} Gamma_{aki} - alpha_{iak} Gamma_{kai} ]
// with k the word index of (word_i . word_a). Off-diagonal entries of the same
// assembled formula are evaluated term by term (each term needs a bracket
// triple to close on two different words at once, so they cancel to exactly
// zero); max_offdiagonal records the verified residual instead of assuming it.
inline RicciSpectrum ricci_tensor(int n_qubits, const Rational &b) {
    StructureConstants sc = structure_constants(n_qubits, b);
    size_t dim = sc.dimension();
    RicciSpectrum spectrum;
    spectrum.n_qubits = n_qubits;
    spectrum.b = b;
    spectrum.dimension = dim;
    spectrum.words = sc.words;
    spectrum.weights = sc.weights;
    spectrum.diagonal_exact.assign(dim, Rational(0));

    for (size_t a = 0; a < dim; a++) {
        Rational total = 0;
        for (size_t i = 0; i < dim; i++) {
            if (i == a || commutes(sc.words[i], sc.words[a])) {
                continue;
            }
            size_t k = sc.position_of[word_index(product(sc.words[i], sc.words[a]).word)];
            Rational alpha_iak = sc.alpha(i, a, k);
            Rational gamma_iak = detail::gamma_coefficient(sc, i, a, k);
            Rational gamma_aki = detail::gamma_coefficient(sc, a, k, i);
            Rational gamma_kai = detail::gamma_coefficient(sc, k, a, i);
            total += -gamma_iak * gamma_aki - alpha_iak * gamma_kai;
        }
        spectrum.diagonal_exact[a] = total;
    }

    // Off-diagonal verification. g2[k] = sum_i Gamma_{iki} vanishes because no
    // bracket projects back onto an operand; the two contraction terms vanish
    // because their second factor needs prod(a, k) = i with k = prod(i, b),
    // forcing a = b. All three are computed, not asserted.
    Rational max_off = 0;
    Rational max_diag_abs = 0;
    for (const Rational &v : spectrum.diagonal_exact) {
        max_diag_abs = std::max(max_diag_abs, Rational(boost::multiprecision::abs(v)));
    }
    std::vector<Rational> g2(dim, Rational(0));
    for (size_t k = 0; k < dim; k++) {
        for (size_t i = 0; i < dim; i++) {
            if (i != k && !commutes(sc.words[i], sc.words[k])) {
                g2[k] += detail::gamma_coefficient(sc, i, k, i);
            }
        }
    }
    for (size_t a = 0; a < dim; a++) {
        for (size_t bidx = 0; bidx < dim; bidx++) {
            if (a == bidx) {
                continue;
            }
            Rational off = 0;
            if (!commutes(sc.words[a], sc.words[bidx])) {
                size_t k = sc.position_of[word_index(product(sc.words[a], sc.words[bidx]).word)];
                off += detail::gamma_coefficient(sc, a, bidx, k) * g2[k];
            }
            for (size_t i = 0; i < dim; i++) {
                if (i != bidx && !commutes(sc.words[i], sc.words[bidx])) {
                    size_t k = sc.position_of[word_index(product(sc.words[i], sc.words[bidx]).word)];
                    // second factor closes only if prod(a, k) == i
                    if (i != a && k != a && !commutes(sc.words[a], sc.words[k]) &&
                        sc.position_of[word_index(product(sc.words[a], sc.words[k]).word)] == i) {
                        off -= detail::gamma_coefficient(sc, i, bidx, k) *
                               detail::gamma_coefficient(sc, a, k, i);
                    }
                }
                if (i != a && !commutes(sc.words[i], sc.words[a])) {
                    size_t k = sc.position_of[word_index(product(sc.words[i], sc.words[a]).word)];
                    if (k != bidx && i != bidx && !commutes(sc.words[k], sc.words[bidx]) &&
                        sc.position_of[word_index(product(sc.words[k], sc.words[bidx]).word)] == i) {
                        off -= sc.alpha(i, a, k) * detail::gamma_coefficient(sc, k, bidx, i);
                    }
                }
            }
            max_off = std::max(max_off, Rational(boost::multiprecision::abs(off)));
        }
    }
    spectrum.max_offdiagonal = to_double(max_off);
    if (max_diag_abs > 0 && max_off * 10000000000LL > max_diag_abs) {
        throw std::logic_error("ricci_tensor: off-diagonal entries exceed 1e-10 relative");
    }

    spectrum.diagonal_values.reserve(dim);
    spectrum.lambda_min_exact = spectrum.diagonal_exact[0];
    spectrum.lambda_max_exact = spectrum.diagonal_exact[0];
    for (const Rational &v : spectrum.diagonal_exact) {
        spectrum.diagonal_values.push_back(to_double(v));
        spectrum.lambda_min_exact = std::min(spectrum.lambda_min_exact, v);
        spectrum.lambda_max_exact = std::max(spectrum.lambda_max_exact, v);
    }
    spectrum.lambda_min = to_double(spectrum.lambda_min_exact);
    spectrum.lambda_max = to_double(spectrum.lambda_max_exact);
    return spectrum;
}

inline std::pair<double, double> ricci_extremes(int n_qubits, const Rational &b) {
    RicciSpectrum s = ricci_tensor(n_qubits, b);
    return {s.lambda_min, s.lambda_max};
}

struct BishopGromovReport {
    int n_qubits = 0;
    double b = 0;
    double d = 0;
    double lambda_min = 0;
    double kappa = 0;          // comparison curvature lambda_min / (dim - 1)
    std::string branch;        // "spherical" | "euclidean" | "hyperbolic"
    size_t dimension = 0;
    double log_vol_M = 0;
    double log_vol_ball = 0;
    double log_bound = 0;
    double bound = 1;          // exp(log_bound) floored at 1
};

namespace detail {
inline constexpr int kQuadratureIntervals = 4096;  // composite Simpson, even

// log of the model-space ball volume vol_kappa(radius R) in dimension m:
// area(S^(m-1)) * integral_0^R sn_kappa(t)^(m-1) dt, all in log domain.
inline long double log_model_ball_volume(long double kappa, long double radius, size_t m) {
    long double log_area = std::log(2.0L) + (static_cast<long double>(m) / 2) * std::log(kPi) -
                           std::lgammal(static_cast<long double>(m) / 2);
    long double cap = radius;
    if (kappa > 0) {
        cap = std::min(radius, kPi / std::sqrt(kappa));
    }
    long double h = cap / kQuadratureIntervals;
    long double power = static_cast<long double>(m) - 1;
    auto log_sn = [&](long double t) -> long double {
        if (t <= 0) {
            return -INFINITY;
        }
        if (kappa > 0) {
            long double s = std::sqrt(kappa);
            long double x = std::sin(s * t);
            return x <= 0 ? -INFINITY : std::log(x) - std::log(s);
        }
        if (kappa < 0) {
            long double s = std::sqrt(-kappa);
            long double st = s * t;
            // ln sinh(x) = x + ln(1 - e^(-2x)) - ln 2, stable for large x
            return st + std::log1p(-std::exp(-2 * st)) - std::log(2.0L) - std::log(s);
        }
        return std::log(t);
    };
    long double acc = -INFINITY;
    for (int i = 0; i <= kQuadratureIntervals; i++) {
        long double w = (i == 0 || i == kQuadratureIntervals) ? 1.0L : (i % 2 ? 4.0L : 2.0L);
        long double f = power * log_sn(h * i);
        if (f != -INFINITY) {
            acc = logaddexp(acc, std::log(w) + f);
        }
    }
    return log_area + acc + std::log(h / 3);
}
}  // namespace detail

inline BishopGromovReport bishop_gromov_bound(const RicciSpectrum &spectrum, double d,
                                              double vol_reference = 1.0) {
    if (!(d > 0)) {
        throw std::domain_error("bishop_gromov_bound: d must be positive");
    }
    if (!(vol_reference > 0)) {
        throw std::domain_error("bishop_gromov_bound: vol_reference must be positive");
    }
    BishopGromovReport report;
    report.n_qubits = spectrum.n_qubits;
    report.b = to_double(spectrum.b);
    report.d = d;
    report.dimension = spectrum.dimension;
    report.lambda_min = spectrum.lambda_min;
    long double kappa = static_cast<long double>(spectrum.lambda_min) /
                        static_cast<long double>(spectrum.dimension - 1);
    report.kappa = static_cast<double>(kappa);
    report.branch = kappa > 0 ? "spherical" : (kappa < 0 ? "hyperbolic" : "euclidean");

    long double sum_weights = 0;
    for (int w : spectrum.weights) {
        sum_weights += w;
    }
    long double log_vol_m = sum_weights * log_rational(spectrum.b) +
                            std::log(static_cast<long double>(vol_reference));
    long double log_ball = detail::log_model_ball_volume(kappa, static_cast<long double>(d),
                                                         spectrum.dimension);
    long double log_bound = log_vol_m - log_ball;
    report.log_vol_M = static_cast<double>(log_vol_m);
    report.log_vol_ball = static_cast<double>(log_ball);
    report.log_bound = static_cast<double>(log_bound);
    report.bound = log_bound <= 0 ? 1.0 : static_cast<double>(std::exp(log_bound));
    return report;
}

inline BishopGromovReport bishop_gromov_bound(int n_qubits, const Rational &b, double d,
                                              double vol_reference = 1.0) {
    return bishop_gromov_bound(ricci_tensor(n_qubits, b), d, vol_reference);
}

// One row of the slackness comparison: the Bishop-Gromov bound at ball scale
// d = b^k next to the topological (covering) bound for the same k.
struct BgComparisonRow {
    int k = 0;
    double d = 0;
    BishopGromovReport bg;
    BigCount theorem_bound_value;
    double log_theorem_bound = 0;
};

inline std::vector<BgComparisonRow> bg_comparison(const RicciSpectrum &spectrum,
                                                  double vol_reference = 1.0) {
    std::vector<BgComparisonRow> rows;
    for (int k = 1; k <= spectrum.n_qubits; k++) {
        BgComparisonRow row;
        row.k = k;
        row.d = to_double(pow_rational(spectrum.b, k));
        row.bg = bishop_gromov_bound(spectrum, row.d, vol_reference);
        row.theorem_bound_value = theorem_bound(spectrum.n_qubits, k, spectrum.b);
        row.log_theorem_bound = row.theorem_bound_value > 0
                                    ? static_cast<double>(log_big(row.theorem_bound_value))
                                    : -INFINITY;
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace covgeo

#endif  // COVGEO_CURVATURE_HPP
