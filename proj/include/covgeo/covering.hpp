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

#ifndef COVGEO_COVERING_HPP
#define COVGEO_COVERING_HPP

#include <cmath>
#include <optional>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "covgeo/bigmath.hpp"

namespace covgeo {

inline constexpr long double kPi = 3.14159265358979323846264338327950288L;

// Float quantities switch to the log-domain mirror above this N; the exact
// integer quantities (lemma/theorem bounds, radicands) have no such limit.
inline constexpr int kExactValueCap = 64;

namespace detail {
inline void require_k_range(int n, int k) {
    if (k < 1 || k > n) {
        throw std::domain_error("require 1 <= k <= N");
    }
}
}  // namespace detail

// Radicand of the torus diameter: sum_{i=1..k} binom(N,i) b^(2i), exact for
// rational b. For k = N this telescopes to (1 + b^2)^N - 1.
inline Rational torus_radicand(int n, int k, const Rational &b) {
    detail::require_k_range(n, k);
    Rational b2 = b * b;
    Rational total = 0;
    Rational power = 1;
    BigCount coefficient = 1;
    for (int i = 1; i <= k; i++) {
        coefficient *= n - i + 1;
        coefficient /= i;
        power *= b2;
        total += Rational(coefficient) * power;
    }
    return total;
}

// Independent log-domain evaluation of ln(radicand) via lgamma + logsumexp;
// never touches big integers, usable at any N.
inline long double log_torus_radicand(int n, int k, long double b) {
    detail::require_k_range(n, k);
    long double log_b2 = 2 * std::log(b);
    long double acc = -INFINITY;
    for (int i = 1; i <= k; i++) {
        acc = logaddexp(acc, log_binomial(n, i) + i * log_b2);
    }
    return acc;
}

// e_k = pi * sqrt(radicand): the diameter of the k-body torus.
inline long double log_torus_diameter_exact(int n, int k, const Rational &b) {
    return std::log(kPi) + log_rational(torus_radicand(n, k, b)) / 2;
}

inline long double log_torus_diameter_logdomain(int n, int k, long double b) {
    return std::log(kPi) + log_torus_radicand(n, k, b) / 2;
}

inline double torus_diameter(int n, int k, const Rational &b) {
    long double lg = log_torus_diameter_exact(n, k, b);
    return static_cast<double>(std::exp(lg));
}

// Default d_c: the full-torus diameter e_N, standing in for the unknown true
// diameter when no explicit cutoff is supplied.
inline double diameter_proxy(int n, const Rational &b) {
    return torus_diameter(n, n, b);
}

inline double trivial_bound(double d, double d_c) {
    if (!(d > 0) || !(d_c > 0)) {
        throw std::domain_error("trivial_bound: inputs must be positive");
    }
    return d_c / d;
}

inline BigCount lemma_bound(int n, int k) {
    detail::require_k_range(n, k);
    return binomial(n, k);
}

namespace detail {
// floor(sqrt(p/q)) for a nonnegative rational, certified by exact comparison.
inline BigCount floor_sqrt_rational(const Rational &r) {
    BigCount p = boost::multiprecision::numerator(r);
    BigCount q = boost::multiprecision::denominator(r);
    BigCount m = isqrt_floor(p * q) / q;
    // Adjustment loop: the division estimate can only be off by a unit; the
    // exact inequalities below are the certificate.
    while (m * m * q > p) {
        m -= 1;
    }
    while ((m + 1) * (m + 1) * q <= p) {
        m += 1;
    }
    return m;
}

using HighFloat = boost::multiprecision::cpp_bin_float_50;

inline HighFloat high_pi() {
    // 50-digit pi; the independent high-precision path never reuses kPi.
    return HighFloat("3.14159265358979323846264338327950288419716939937511");
}
}  // namespace detail

// floor(d_c / e_k) with the default proxy d_c = e_N: the pi factors cancel,
// so the floor is floor(sqrt(radicand_N / radicand_k)) — an exact integer
// computation, never a floating division.
inline BigCount certified_floor_default_proxy(int n, int k, const Rational &b) {
    Rational ratio = torus_radicand(n, n, b) / torus_radicand(n, k, b);
    return detail::floor_sqrt_rational(ratio);
}

// floor(d_c / e_k) for an explicit rational d_c. e_k is irrational (pi times
// a square root), so the floor is evaluated with 50-digit arithmetic and the
// distance to the nearest integer is checked; `certified` reports whether the
// margin was conclusive (it always is unless d_c conspires to within 1e-35 of
// an exact multiple of e_k).
inline BigCount certified_floor_explicit(int n, int k, const Rational &b, const Rational &d_c, bool *certified = nullptr) {
    detail::require_k_range(n, k);
    if (!(d_c > 0)) {
        throw std::domain_error("d_c must be positive");
    }
    using detail::HighFloat;
    HighFloat radicand = static_cast<HighFloat>(torus_radicand(n, k, b));
    HighFloat e_k = detail::high_pi() * boost::multiprecision::sqrt(radicand);
    HighFloat ratio = static_cast<HighFloat>(d_c) / e_k;
    HighFloat floor_value = boost::multiprecision::floor(ratio);
    if (certified != nullptr) {
        HighFloat margin = ratio - floor_value;
        *certified = margin > HighFloat("1e-35") && (HighFloat(1) - margin) > HighFloat("1e-35");
    }
    return floor_value.convert_to<BigCount>();
}

inline BigCount theorem_bound(int n, int k, const Rational &b, const std::optional<Rational> &d_c = std::nullopt) {
    detail::require_k_range(n, k);
    BigCount floor_m = d_c.has_value() ? certified_floor_explicit(n, k, b, *d_c)
                                       : certified_floor_default_proxy(n, k, b);
    return floor_m * lemma_bound(n, k);
}

// Exact enhancement ratio (b^k / e_k) * binom(N, k); the pi stays in.
inline long double log_bound_ratio_exact(int n, int k, const Rational &b) {
    detail::require_k_range(n, k);
    return k * log_rational(b) + log_big(lemma_bound(n, k)) - log_torus_diameter_exact(n, k, b);
}

inline double bound_ratio_exact(int n, int k, const Rational &b) {
    return static_cast<double>(std::exp(log_bound_ratio_exact(n, k, b)));
}

// Large-N approximation of the enhancement ratio: sqrt(binom(N, k)).
inline double bound_ratio_approx(int n, int k) {
    if (k < 0 || k > n) {
        throw std::domain_error("bound_ratio_approx: require 0 <= k <= N");
    }
    BigCount c = binomial(n, k);
    return static_cast<double>(std::exp(log_big(c) / 2));
}

struct CoveringBoundReport {
    int n_qubits = 0;
    int k = 0;
    Rational b;
    Rational radicand;            // exact radicand of e_k
    double e_k = 0;               // torus diameter, metric length units
    double d_c = 0;               // diameter proxy in use
    bool d_c_overridden = false;
    double trivial_bound_value = 0;  // d_c / b^k, the scale-b^k trivial cover
    BigCount lemma_bound_value;
    BigCount theorem_bound_value;
    BigCount floor_copies;        // floor(d_c / e_k)
    bool floor_certified = true;
    double ratio_exact = 0;
    double ratio_approx = 0;
    bool log_domain = false;      // float fields sourced from the log mirror
    double log_e_k = 0;
    double log_d_c = 0;
    double log_trivial_bound = 0;
    double log_ratio_exact = 0;
    double log_ratio_approx = 0;
};

inline CoveringBoundReport covering_report(int n, int k, const Rational &b,
                                           const std::optional<Rational> &d_c = std::nullopt) {
    detail::require_k_range(n, k);
    if (!(b > 1)) {
        throw std::domain_error("covering_report: base b must exceed 1");
    }
    CoveringBoundReport report;
    report.n_qubits = n;
    report.k = k;
    report.b = b;
    report.log_domain = n > kExactValueCap;

    long double log_b = log_rational(b);
    long double log_e_k = report.log_domain ? log_torus_diameter_logdomain(n, k, to_long_double(b))
                                            : log_torus_diameter_exact(n, k, b);
    long double log_d_c;
    if (d_c.has_value()) {
        if (!(*d_c > 0)) {
            throw std::domain_error("covering_report: d_c must be positive");
        }
        report.d_c_overridden = true;
        log_d_c = log_rational(*d_c);
    } else {
        log_d_c = report.log_domain ? log_torus_diameter_logdomain(n, n, to_long_double(b))
                                    : log_torus_diameter_exact(n, n, b);
    }

    if (!report.log_domain) {
        report.radicand = torus_radicand(n, k, b);
    }
    report.e_k = static_cast<double>(std::exp(log_e_k));
    report.d_c = static_cast<double>(std::exp(log_d_c));
    report.lemma_bound_value = lemma_bound(n, k);
    if (d_c.has_value()) {
        report.floor_copies = certified_floor_explicit(n, k, b, *d_c, &report.floor_certified);
    } else {
        report.floor_copies = certified_floor_default_proxy(n, k, b);
        report.floor_certified = true;
    }
    report.theorem_bound_value = report.floor_copies * report.lemma_bound_value;

    long double log_trivial = log_d_c - k * log_b;
    long double log_ratio_exact = k * log_b + log_big(report.lemma_bound_value) - log_e_k;
    long double log_ratio_approx = log_big(report.lemma_bound_value) / 2;
    report.trivial_bound_value = static_cast<double>(std::exp(log_trivial));
    report.ratio_exact = static_cast<double>(std::exp(log_ratio_exact));
    report.ratio_approx = static_cast<double>(std::exp(log_ratio_approx));
    report.log_e_k = static_cast<double>(log_e_k);
    report.log_d_c = static_cast<double>(log_d_c);
    report.log_trivial_bound = static_cast<double>(log_trivial);
    report.log_ratio_exact = static_cast<double>(log_ratio_exact);
    report.log_ratio_approx = static_cast<double>(log_ratio_approx);
    return report;
}

}  // namespace covgeo

#endif  // COVGEO_COVERING_HPP
