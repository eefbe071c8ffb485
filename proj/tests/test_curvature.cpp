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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "covgeo/curvature.hpp"

using namespace covgeo;

namespace {

size_t position_of_text(const StructureConstants &sc, const std::string &text) {
    return sc.position_of[word_index(parse_word(text))];
}

}  // namespace

TEST_CASE("structure constants, N = 1: the single su(2) triple") {
    StructureConstants sc = structure_constants(1, Rational(2));
    REQUIRE(sc.dimension() == 3);
    CHECK(render_word(sc.words[0]) == "X");
    CHECK(render_word(sc.words[1]) == "Y");
    CHECK(render_word(sc.words[2]) == "Z");
    // alpha_XYZ = 2 sigma b^(1-2) with XY = i Z giving sigma = -1.
    CHECK(sc.alpha(0, 1, 2) == Rational(-1));
    CHECK(sc.alpha(1, 0, 2) == Rational(1));
    // Projection on a non-closing target is zero.
    CHECK(sc.alpha(0, 1, 0) == 0);
    CHECK(sc.alpha(0, 1, 1) == 0);
}

TEST_CASE("structure constants: antisymmetry and closure on the product word, N = 2") {
    StructureConstants sc = structure_constants(2, Rational(4));
    for (const auto &[key, entry] : sc.entries) {
        auto [i, j] = key;
        // the bracket closes exactly on the product word
        CHECK(entry.target == sc.position_of[word_index(product(sc.words[i], sc.words[j]).word)]);
        // alpha_{ij.} = -alpha_{ji.}
        CHECK(sc.alpha(j, i, entry.target) == -entry.value);
        CHECK(entry.value != 0);
    }
    // Worked value: [f_1X, f_XY] lands on XZ with sigma = -1, weights 1, 2, 2.
    CHECK(sc.alpha(position_of_text(sc, "1X"), position_of_text(sc, "XY"), position_of_text(sc, "XZ")) ==
          Rational(-1, 2));
}

TEST_CASE("structure constants at b = 1 all have magnitude 2") {
    for (int n = 1; n <= 2; n++) {
        StructureConstants sc = structure_constants(n, Rational(1));
        for (const auto &[key, entry] : sc.entries) {
            CHECK(boost::multiprecision::abs(entry.value) == 2);
        }
    }
}

TEST_CASE("Ricci diagonal, N = 1: 2 / b^2 for every direction") {
    for (const Rational &b : {Rational(1), Rational(2), Rational(4), Rational(5)}) {
        RicciSpectrum s = ricci_tensor(1, b);
        REQUIRE(s.dimension == 3);
        for (const Rational &v : s.diagonal_exact) {
            CHECK(v == Rational(2) / (b * b));
        }
        CHECK(s.max_offdiagonal == 0.0);
    }
}

TEST_CASE("Ricci diagonal, N = 2: exact values by weight class") {
    RicciSpectrum s2 = ricci_tensor(2, Rational(2));
    REQUIRE(s2.dimension == 15);
    for (size_t i = 0; i < s2.dimension; i++) {
        CHECK(s2.diagonal_exact[i] == (s2.weights[i] == 1 ? Rational(19, 32) : Rational(7, 8)));
    }
    CHECK(s2.lambda_min_exact == Rational(19, 32));
    CHECK(s2.lambda_max_exact == Rational(7, 8));

    RicciSpectrum s4 = ricci_tensor(2, Rational(4));
    for (size_t i = 0; i < s4.dimension; i++) {
        CHECK(s4.diagonal_exact[i] == (s4.weights[i] == 1 ? Rational(259, 2048) : Rational(31, 512)));
    }
    CHECK(s4.lambda_min_exact == Rational(31, 512));
    CHECK(s4.lambda_min > 0);
}

TEST_CASE("Ricci diagonal, N = 3: exact values by weight class") {
    RicciSpectrum s2 = ricci_tensor(3, Rational(2));
    REQUIRE(s2.dimension == 63);
    for (size_t i = 0; i < s2.dimension; i++) {
        Rational expected = s2.weights[i] == 1 ? Rational(361, 512)
                            : s2.weights[i] == 2 ? Rational(-17, 8)
                                                 : Rational(893, 256);
        CHECK(s2.diagonal_exact[i] == expected);
    }
    CHECK(s2.lambda_min_exact == Rational(-17, 8));
    CHECK(s2.lambda_max_exact == Rational(893, 256));

    RicciSpectrum s4 = ricci_tensor(3, Rational(4));
    for (size_t i = 0; i < s4.dimension; i++) {
        Rational expected = s4.weights[i] == 1 ? Rational(67081, 524288)
                            : s4.weights[i] == 2 ? Rational(-641, 512)
                                                 : Rational(198653, 262144);
        CHECK(s4.diagonal_exact[i] == expected);
    }
    CHECK(s4.lambda_min_exact == Rational(-641, 512));
}

TEST_CASE("b = 1 is the bi-invariant Einstein point: Ric = (4^N / 2) g") {
    for (int n = 1; n <= 3; n++) {
        RicciSpectrum s = ricci_tensor(n, Rational(1));
        Rational einstein = Rational(pow_big(4, static_cast<uint64_t>(n))) / 2;
        for (const Rational &v : s.diagonal_exact) {
            REQUIRE(v == einstein);
        }
        double spread = s.lambda_max - s.lambda_min;
        CHECK(spread < 1e-8);
        CHECK(s.max_offdiagonal == 0.0);
    }
}

TEST_CASE("weight sum identity: sum_I w(I) = 3 N 4^(N-1)") {
    for (int n = 1; n <= 3; n++) {
        RicciSpectrum s = ricci_tensor(n, Rational(2));
        long long total = 0;
        for (int w : s.weights) {
            total += w;
        }
        CHECK(total == 3LL * n * (1LL << (2 * (n - 1))));
    }
}

TEST_CASE("model ball volumes against closed forms") {
    // Euclidean, m = 4: vol = pi^2 R^4 / 2
    double r = 2.5;
    double euclidean = std::exp(static_cast<double>(detail::log_model_ball_volume(0.0L, r, 4)));
    CHECK(std::abs(euclidean / (M_PI * M_PI * std::pow(r, 4) / 2.0) - 1.0) < 1e-6);
    // Spherical, m = 2, kappa = 1/2: cap saturates at the full sphere 4 pi / kappa
    double grown = std::exp(static_cast<double>(detail::log_model_ball_volume(0.5L, 100.0, 2)));
    CHECK(std::abs(grown / (8.0 * M_PI) - 1.0) < 1e-6);
    double at_cap = std::exp(static_cast<double>(
        detail::log_model_ball_volume(0.5L, static_cast<long double>(M_PI) / std::sqrt(0.5L), 2)));
    CHECK(std::abs(grown - at_cap) < 1e-9);
    // Hyperbolic, m = 2, kappa = -1: vol = 2 pi (cosh R - 1)
    double hyper = std::exp(static_cast<double>(detail::log_model_ball_volume(-1.0L, 3.0, 2)));
    CHECK(std::abs(hyper / (2.0 * M_PI * (std::cosh(3.0) - 1.0)) - 1.0) < 1e-6);
}

TEST_CASE("Bishop-Gromov report, N = 2, b = 4: spherical branch") {
    RicciSpectrum s = ricci_tensor(2, Rational(4));
    BishopGromovReport report = bishop_gromov_bound(s, 16.0);
    CHECK(report.branch == "spherical");
    CHECK(report.kappa > 0);
    CHECK(std::abs(report.kappa - (31.0 / 512.0) / 14.0) < 1e-15);
    CHECK(report.dimension == 15);
    CHECK(std::abs(report.log_vol_M - 24.0 * std::log(4.0)) < 1e-9);
    CHECK(std::abs(report.log_bound - (report.log_vol_M - report.log_vol_ball)) < 1e-12);
    CHECK(report.bound >= 1.0);
    CHECK(std::isfinite(report.bound));
}

TEST_CASE("Bishop-Gromov report, N = 3, b = 4: hyperbolic branch") {
    BishopGromovReport report = bishop_gromov_bound(3, Rational(4), 64.0);
    CHECK(report.branch == "hyperbolic");
    CHECK(report.kappa < 0);
    CHECK(report.bound >= 1.0);
    CHECK(std::isfinite(report.log_bound));
}

TEST_CASE("Bishop-Gromov bound is non-increasing in the ball radius") {
    RicciSpectrum s = ricci_tensor(2, Rational(4));
    double previous = INFINITY;
    for (double d : {1.0, 4.0, 16.0, 40.0}) {
        BishopGromovReport report = bishop_gromov_bound(s, d);
        CHECK(report.log_bound <= previous + 1e-12);
        previous = report.log_bound;
    }
    // vol_reference scales vol_M multiplicatively
    BishopGromovReport base = bishop_gromov_bound(s, 4.0);
    BishopGromovReport scaled = bishop_gromov_bound(s, 4.0, 2.0);
    CHECK(std::abs((scaled.log_vol_M - base.log_vol_M) - std::log(2.0)) < 1e-12);
}

TEST_CASE("kappa at the Einstein point, N = 2") {
    BishopGromovReport report = bishop_gromov_bound(2, Rational(1), 1.0);
    CHECK(std::abs(report.kappa - 8.0 / 14.0) < 1e-15);
    CHECK(report.branch == "spherical");
}

TEST_CASE("comparison rows pair the geometric and topological bounds") {
    RicciSpectrum s = ricci_tensor(2, Rational(4));
    auto rows = bg_comparison(s);
    REQUIRE(rows.size() == 2);
    for (size_t i = 0; i < rows.size(); i++) {
        int k = static_cast<int>(i) + 1;
        CHECK(rows[i].k == k);
        CHECK(std::abs(rows[i].d - std::pow(4.0, k)) < 1e-12);
        CHECK(rows[i].theorem_bound_value == theorem_bound(2, k, Rational(4)));
        CHECK(rows[i].bg.bound >= 1.0);
        CHECK(std::isfinite(rows[i].log_theorem_bound));
    }
}

TEST_CASE("curvature argument validation") {
    CHECK_THROWS_AS(structure_constants(5, Rational(2)), std::domain_error);
    CHECK_THROWS_AS(structure_constants(0, Rational(2)), std::domain_error);
    CHECK_THROWS_AS(structure_constants(2, Rational(0)), std::domain_error);
    RicciSpectrum s = ricci_tensor(1, Rational(2));
    CHECK_THROWS_AS(bishop_gromov_bound(s, 0.0), std::domain_error);
    CHECK_THROWS_AS(bishop_gromov_bound(s, 1.0, 0.0), std::domain_error);
}
