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
// JSON record builders shared by the CLI and the round-trip tests, so that
// re-verification exercises the same serialization path the tool uses.
// Numeric payloads are emitted as decimal strings: "%.{precision}g" for
// floats, plain decimal for big integers, "p/q" for non-integer rationals.
// Small structural integers (N, k, seed, ...) stay JSON numbers.

#ifndef COVGEO_SERIALIZE_HPP
#define COVGEO_SERIALIZE_HPP

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "json.hpp"

#include "covgeo/cartan.hpp"
#include "covgeo/code_search.hpp"
#include "covgeo/covering.hpp"
#include "covgeo/curvature.hpp"
#include "covgeo/expansion.hpp"
#include "covgeo/geodesic_check.hpp"
#include "covgeo/pauli.hpp"

namespace covgeo::serialize {

using ordered_json = nlohmann::ordered_json;

inline std::string fmt_double(double value, int precision) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.*g", precision, value);
    return buffer;
}

inline std::string rational_str(const Rational &r) {
    BigCount num = boost::multiprecision::numerator(r);
    BigCount den = boost::multiprecision::denominator(r);
    if (den == 1) {
        return num.str();
    }
    return num.str() + "/" + den.str();
}

inline std::string big_str(const BigCount &n) {
    return n.str();
}

inline ordered_json phased_pauli_json(const PhasedPauli &p) {
    ordered_json j;
    j["zero"] = p.is_zero();
    j["word"] = render_word(p.word);
    j["phase_exp"] = p.phase_exp;
    j["coefficient"] = rational_str(p.coefficient);
    return j;
}

// Terms sorted by (weight, text) for stable display.
inline ordered_json expansion_json(const HermExpansion &e) {
    std::vector<std::pair<std::pair<int, std::string>, Rational>> terms;
    for (const auto &[word, coefficient] : e.terms) {
        terms.push_back({{weight(word), render_word(word)}, coefficient});
    }
    std::sort(terms.begin(), terms.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    ordered_json arr = ordered_json::array();
    for (const auto &[key, coefficient] : terms) {
        ordered_json t;
        t["word"] = key.second;
        t["coefficient"] = rational_str(coefficient);
        arr.push_back(t);
    }
    return arr;
}

inline ordered_json covering_report_json(const CoveringBoundReport &r, int precision) {
    ordered_json j;
    j["type"] = "covering_report";
    j["N"] = r.n_qubits;
    j["k"] = r.k;
    j["b"] = rational_str(r.b);
    j["e_k"] = fmt_double(r.e_k, precision);
    j["d_c"] = fmt_double(r.d_c, precision);
    j["d_c_overridden"] = r.d_c_overridden;
    j["trivial_bound"] = fmt_double(r.trivial_bound_value, precision);
    j["lemma_bound"] = big_str(r.lemma_bound_value);
    j["theorem_bound"] = big_str(r.theorem_bound_value);
    j["floor_copies"] = big_str(r.floor_copies);
    j["floor_certified"] = r.floor_certified;
    j["ratio_exact"] = fmt_double(r.ratio_exact, precision);
    j["ratio_approx"] = fmt_double(r.ratio_approx, precision);
    j["log_domain"] = r.log_domain;
    j["log_e_k"] = fmt_double(r.log_e_k, precision);
    j["log_d_c"] = fmt_double(r.log_d_c, precision);
    j["log_trivial_bound"] = fmt_double(r.log_trivial_bound, precision);
    j["log_ratio_exact"] = fmt_double(r.log_ratio_exact, precision);
    j["log_ratio_approx"] = fmt_double(r.log_ratio_approx, precision);
    return j;
}

inline ordered_json tower_json(const CartanTower &tower) {
    ordered_json j;
    j["type"] = "cartan_tower";
    j["N"] = tower.n_qubits;
    j["k"] = tower.level;
    j["dimension"] = tower.basis.size();
    ordered_json words = ordered_json::array();
    for (const PauliWord &w : tower.basis) {
        words.push_back(render_word(w));
    }
    j["words"] = words;
    return j;
}

inline ordered_json geodesic_json(const GeodesicCheckReport &r) {
    ordered_json j;
    j["type"] = "geodesic_check";
    j["N"] = r.n_qubits;
    j["k"] = r.level;
    j["b"] = rational_str(r.b);
    j["samples"] = r.samples;
    j["passed"] = r.passed;
    j["seed"] = r.seed;
    j["all_passed"] = r.all_passed();
    return j;
}

inline ordered_json code_result_json(const CodeSearchResult &r) {
    ordered_json j;
    j["type"] = "code";
    j["n"] = r.code.n_modes;
    j["predicate"] = predicate_name(r.predicate);
    j["method"] = r.method;
    j["k"] = r.code.dimension();
    j["rate"] = rational_str(r.rate);
    j["rate_paper"] = rational_str(r.rate_paper);
    j["distance"] = r.distance;
    j["valid"] = r.valid;
    j["seed"] = r.seed;
    ordered_json gens = ordered_json::array();
    for (const MajoranaString &g : r.code.generators) {
        gens.push_back(render_majorana(g));
    }
    j["generators"] = gens;
    return j;
}

inline ordered_json ricci_json(const RicciSpectrum &s, int precision) {
    ordered_json j;
    j["type"] = "ricci_spectrum";
    j["N"] = s.n_qubits;
    j["b"] = rational_str(s.b);
    j["dimension"] = s.dimension;
    j["lambda_min"] = fmt_double(s.lambda_min, precision);
    j["lambda_max"] = fmt_double(s.lambda_max, precision);
    j["max_offdiagonal"] = fmt_double(s.max_offdiagonal, precision);
    ordered_json diag = ordered_json::array();
    for (size_t i = 0; i < s.dimension; i++) {
        ordered_json entry;
        entry["word"] = render_word(s.words[i]);
        entry["weight"] = s.weights[i];
        entry["value"] = fmt_double(s.diagonal_values[i], precision);
        diag.push_back(entry);
    }
    j["diagonal"] = diag;
    return j;
}

inline ordered_json bg_json(const BishopGromovReport &r, int precision) {
    ordered_json j;
    j["type"] = "bishop_gromov";
    j["N"] = r.n_qubits;
    j["b"] = fmt_double(r.b, precision);
    j["d"] = fmt_double(r.d, precision);
    j["dimension"] = r.dimension;
    j["lambda_min"] = fmt_double(r.lambda_min, precision);
    j["kappa"] = fmt_double(r.kappa, precision);
    j["branch"] = r.branch;
    j["log_vol_M"] = fmt_double(r.log_vol_M, precision);
    j["log_vol_ball"] = fmt_double(r.log_vol_ball, precision);
    j["log_bound"] = fmt_double(r.log_bound, precision);
    j["bound"] = fmt_double(r.bound, precision);
    return j;
}

inline ordered_json bg_row_json(const BgComparisonRow &row, int precision) {
    ordered_json j = bg_json(row.bg, precision);
    j["type"] = "bg_comparison";
    j["k"] = row.k;
    j["theorem_bound"] = big_str(row.theorem_bound_value);
    j["log_theorem_bound"] = fmt_double(row.log_theorem_bound, precision);
    return j;
}

}  // namespace covgeo::serialize

#endif  // COVGEO_SERIALIZE_HPP
