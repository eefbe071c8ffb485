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
// covgeo command-line tool. Every run is deterministic: fixed field orders,
// fixed float formatting (%.{precision}g), exact integers and rationals as
// decimal strings, and seeded randomness only. Exit codes: 0 on success, 2 on
// any usage or computation error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"

#include "covgeo/bigmath.hpp"
#include "covgeo/cartan.hpp"
#include "covgeo/code_search.hpp"
#include "covgeo/covering.hpp"
#include "covgeo/curvature.hpp"
#include "covgeo/expansion.hpp"
#include "covgeo/geodesic_check.hpp"
#include "covgeo/majorana.hpp"
#include "covgeo/metric.hpp"
#include "covgeo/pauli.hpp"
#include "covgeo/serialize.hpp"

using namespace covgeo;
using serialize::big_str;
using serialize::fmt_double;
using serialize::ordered_json;
using serialize::rational_str;

namespace {

struct CommonOpts {
    std::string format = "json";
    int precision = 17;
};

void add_common(CLI::App *cmd, CommonOpts &opts) {
    cmd->add_option("--format", opts.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    cmd->add_option("--precision", opts.precision, "Significant digits for float output")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
}

int strict_int(const std::string &text) {
    size_t pos = 0;
    int value = std::stoi(text, &pos);
    if (pos != text.size()) {
        throw std::invalid_argument("not an integer: " + text);
    }
    return value;
}

// "2" or "1..10"
std::pair<int, int> parse_k_range(const std::string &text, int n) {
    size_t dots = text.find("..");
    int lo = 0;
    int hi = 0;
    try {
        if (dots == std::string::npos) {
            lo = hi = strict_int(text);
        } else {
            lo = strict_int(text.substr(0, dots));
            hi = strict_int(text.substr(dots + 2));
        }
    } catch (const std::invalid_argument &) {
        throw std::invalid_argument("bad k range: " + text);
    } catch (const std::out_of_range &) {
        throw std::invalid_argument("bad k range: " + text);
    }
    if (lo < 1 || lo > hi || hi > n) {
        throw std::domain_error("k range must satisfy 1 <= lo <= hi <= N: " + text);
    }
    return {lo, hi};
}

// "p", "p/q", or a plain decimal.
Rational parse_coefficient(const std::string &text) {
    size_t slash = text.find('/');
    if (slash == std::string::npos) {
        return parse_decimal_rational(text);
    }
    BigCount num(text.substr(0, slash));
    BigCount den(text.substr(slash + 1));
    if (den == 0) {
        throw std::domain_error("zero denominator in coefficient: " + text);
    }
    return Rational(num, den);
}

// Entries of the form WORD:COEF, each possibly comma-joined.
HermExpansion parse_terms(const std::vector<std::string> &entries, const std::string &flag) {
    std::vector<std::pair<PauliWord, Rational>> parsed;
    for (const std::string &entry : entries) {
        std::stringstream stream(entry);
        std::string piece;
        while (std::getline(stream, piece, ',')) {
            size_t colon = piece.find(':');
            if (colon == std::string::npos || colon == 0) {
                throw std::invalid_argument(flag + ": expected WORD:COEF, got '" + piece + "'");
            }
            parsed.emplace_back(parse_word(piece.substr(0, colon)),
                                parse_coefficient(piece.substr(colon + 1)));
        }
    }
    if (parsed.empty()) {
        throw std::invalid_argument(flag + ": no terms given");
    }
    HermExpansion expansion(parsed[0].first.n_qubits);
    for (const auto &[word, coefficient] : parsed) {
        expansion.add_term(word, coefficient);
    }
    return expansion;
}

void print_json_document(const std::string &command, ordered_json params, ordered_json results,
                         const std::vector<std::string> &warnings) {
    ordered_json doc;
    doc["command"] = command;
    doc["params"] = std::move(params);
    doc["results"] = std::move(results);
    doc["warnings"] = warnings;
    std::cout << doc.dump(2) << "\n";
}

void print_warnings_text(const std::vector<std::string> &warnings) {
    for (const std::string &w : warnings) {
        std::cout << "warning: " << w << "\n";
    }
}

std::string bool_str(bool v) {
    return v ? "true" : "false";
}

// ------------------------------------------------------------------ bounds --

struct BoundsOpts {
    int n = 0;
    std::string k_text;
    std::string b_text = "4";
    std::string d_c_text;
    CommonOpts common;
};

int run_bounds(const BoundsOpts &opts) {
    Rational b = parse_decimal_rational(opts.b_text);
    auto [k_lo, k_hi] = parse_k_range(opts.k_text, opts.n);
    std::optional<Rational> d_c;
    if (!opts.d_c_text.empty()) {
        d_c = parse_decimal_rational(opts.d_c_text);
    }

    std::vector<CoveringBoundReport> reports;
    for (int k = k_lo; k <= k_hi; k++) {
        reports.push_back(covering_report(opts.n, k, b, d_c));
    }

    std::vector<std::string> warnings;
    if (!reports.empty() && reports.front().log_domain) {
        warnings.push_back("N exceeds the exact-value cap (64): float fields use the log-domain mirror; integer bounds remain exact");
    }
    for (const CoveringBoundReport &r : reports) {
        if (!r.floor_certified) {
            warnings.push_back("floor(d_c / e_" + std::to_string(r.k) + ") margin below certification threshold");
        }
    }

    int precision = opts.common.precision;
    if (opts.common.format == "json") {
        ordered_json params;
        params["N"] = opts.n;
        params["k_min"] = k_lo;
        params["k_max"] = k_hi;
        params["b"] = rational_str(b);
        params["d_c"] = d_c.has_value() ? ordered_json(rational_str(*d_c)) : ordered_json(nullptr);
        params["precision"] = precision;
        ordered_json results = ordered_json::array();
        for (const CoveringBoundReport &r : reports) {
            results.push_back(serialize::covering_report_json(r, precision));
        }
        print_json_document("bounds", params, results, warnings);
    } else if (opts.common.format == "csv") {
        std::cout << "N,k,b,e_k,d_c,d_c_overridden,trivial_bound,lemma_bound,theorem_bound,"
                     "floor_copies,floor_certified,ratio_exact,ratio_approx,log_domain,"
                     "log_e_k,log_d_c,log_trivial_bound,log_ratio_exact,log_ratio_approx\n";
        for (const CoveringBoundReport &r : reports) {
            std::cout << r.n_qubits << "," << r.k << "," << rational_str(r.b) << ","
                      << fmt_double(r.e_k, precision) << "," << fmt_double(r.d_c, precision) << ","
                      << bool_str(r.d_c_overridden) << ","
                      << fmt_double(r.trivial_bound_value, precision) << ","
                      << big_str(r.lemma_bound_value) << "," << big_str(r.theorem_bound_value) << ","
                      << big_str(r.floor_copies) << "," << bool_str(r.floor_certified) << ","
                      << fmt_double(r.ratio_exact, precision) << ","
                      << fmt_double(r.ratio_approx, precision) << "," << bool_str(r.log_domain) << ","
                      << fmt_double(r.log_e_k, precision) << "," << fmt_double(r.log_d_c, precision)
                      << "," << fmt_double(r.log_trivial_bound, precision) << ","
                      << fmt_double(r.log_ratio_exact, precision) << ","
                      << fmt_double(r.log_ratio_approx, precision) << "\n";
        }
    } else {
        std::cout << "covering bounds: N=" << opts.n << " b=" << rational_str(b)
                  << (d_c.has_value() ? " d_c=" + rational_str(*d_c) : " d_c=e_N (proxy)") << "\n";
        print_warnings_text(warnings);
        for (const CoveringBoundReport &r : reports) {
            std::cout << "k=" << r.k << ": e_k=" << fmt_double(r.e_k, precision)
                      << " d_c=" << fmt_double(r.d_c, precision)
                      << " trivial_bound=" << fmt_double(r.trivial_bound_value, precision)
                      << " lemma_bound=" << big_str(r.lemma_bound_value)
                      << " theorem_bound=" << big_str(r.theorem_bound_value) << " (floor "
                      << big_str(r.floor_copies) << ", certified=" << bool_str(r.floor_certified)
                      << ") ratio_exact=" << fmt_double(r.ratio_exact, precision)
                      << " ratio_approx=" << fmt_double(r.ratio_approx, precision) << "\n";
        }
    }
    return 0;
}

// ------------------------------------------------------------------- tower --

struct TowerOpts {
    int n = 0;
    int k = 0;
    std::string b_text = "4";
    bool verify_geodesic = false;
    int samples = 100;
    uint64_t seed = 1;
    CommonOpts common;
};

int run_tower(const TowerOpts &opts) {
    Rational b = parse_decimal_rational(opts.b_text);
    CartanTower tower = cartan_tower(opts.n, opts.k);
    std::optional<GeodesicCheckReport> check;
    if (opts.verify_geodesic) {
        check = verify_tower_geodesic(opts.n, opts.k, b, opts.samples, opts.seed);
    }

    std::vector<std::string> warnings;
    if (check.has_value() && !check->all_passed()) {
        warnings.push_back("geodesic check failed on " + std::to_string(check->samples - check->passed) + " sample(s)");
    }

    if (opts.common.format == "json") {
        ordered_json params;
        params["N"] = opts.n;
        params["k"] = opts.k;
        params["b"] = rational_str(b);
        params["verify_geodesic"] = opts.verify_geodesic;
        params["samples"] = opts.samples;
        params["seed"] = opts.seed;
        params["precision"] = opts.common.precision;
        ordered_json results = ordered_json::array();
        results.push_back(serialize::tower_json(tower));
        if (check.has_value()) {
            results.push_back(serialize::geodesic_json(*check));
        }
        print_json_document("tower", params, results, warnings);
    } else if (opts.common.format == "csv") {
        std::cout << "index,word,weight\n";
        for (size_t i = 0; i < tower.basis.size(); i++) {
            std::cout << i << "," << render_word(tower.basis[i]) << "," << weight(tower.basis[i])
                      << "\n";
        }
        if (check.has_value()) {
            std::cout << "\nsamples,passed,seed,all_passed\n";
            std::cout << check->samples << "," << check->passed << "," << check->seed << ","
                      << bool_str(check->all_passed()) << "\n";
        }
    } else {
        std::cout << "cartan tower: N=" << opts.n << " k=" << opts.k
                  << " dimension=" << tower.basis.size() << "\n";
        print_warnings_text(warnings);
        std::cout << "words:";
        for (const PauliWord &w : tower.basis) {
            std::cout << " " << render_word(w);
        }
        std::cout << "\n";
        if (check.has_value()) {
            std::cout << "geodesic check: passed " << check->passed << "/" << check->samples
                      << " (seed=" << check->seed << ", b=" << rational_str(b) << ")\n";
        }
    }
    return 0;
}

// ----------------------------------------------------------------- bracket --

struct BracketOpts {
    std::string p_text;
    std::string q_text;
    std::vector<std::string> h_entries;
    std::vector<std::string> k_entries;
    std::string b_text = "4";
    CommonOpts common;
};

int run_bracket(const BracketOpts &opts) {
    bool pair_mode = !opts.p_text.empty() || !opts.q_text.empty();
    bool expansion_mode = !opts.h_entries.empty() || !opts.k_entries.empty();
    if (pair_mode == expansion_mode) {
        throw std::invalid_argument("bracket: give either --p/--q or --h/--K");
    }
    int precision = opts.common.precision;

    if (pair_mode) {
        if (opts.p_text.empty() || opts.q_text.empty()) {
            throw std::invalid_argument("bracket: pair mode needs both --p and --q");
        }
        PauliWord p = parse_word(opts.p_text);
        PauliWord q = parse_word(opts.q_text);
        PhasedPauli result = bracket(p, q);
        if (opts.common.format == "json") {
            ordered_json params;
            params["mode"] = "pair";
            params["p"] = render_word(p);
            params["q"] = render_word(q);
            params["precision"] = precision;
            ordered_json record;
            record["type"] = "bracket";
            record["p"] = render_word(p);
            record["q"] = render_word(q);
            ordered_json phased = serialize::phased_pauli_json(result);
            for (auto &[key, value] : phased.items()) {
                record[key] = value;
            }
            ordered_json results = ordered_json::array();
            results.push_back(record);
            print_json_document("bracket", params, results, {});
        } else if (opts.common.format == "csv") {
            std::cout << "p,q,zero,word,phase_exp,coefficient\n";
            std::cout << render_word(p) << "," << render_word(q) << "," << bool_str(result.is_zero())
                      << "," << render_word(result.word) << "," << result.phase_exp << ","
                      << rational_str(result.coefficient) << "\n";
        } else {
            if (result.is_zero()) {
                std::cout << "[" << render_word(p) << ", " << render_word(q) << "] = 0\n";
            } else {
                std::cout << "[" << render_word(p) << ", " << render_word(q) << "] = "
                          << rational_str(result.coefficient) << " i^" << result.phase_exp << " "
                          << render_word(result.word) << "\n";
            }
        }
        return 0;
    }

    if (opts.h_entries.empty() || opts.k_entries.empty()) {
        throw std::invalid_argument("bracket: expansion mode needs both --h and --K");
    }
    HermExpansion h = parse_terms(opts.h_entries, "--h");
    HermExpansion k = parse_terms(opts.k_entries, "--K");
    if (h.n_qubits != k.n_qubits) {
        throw std::invalid_argument("bracket: --h and --K act on different qubit counts");
    }
    Rational b = parse_decimal_rational(opts.b_text);
    PenaltyMetric metric(h.n_qubits, b);
    HermExpansion m = bracket_expand(h, k);
    bool xtype_empty = xtype_component(m).empty();
    Rational pairing = arnold_kheshin_rhs(h, k, metric);

    if (opts.common.format == "json") {
        ordered_json params;
        params["mode"] = "expansion";
        params["n"] = h.n_qubits;
        params["b"] = rational_str(b);
        params["h"] = serialize::expansion_json(h);
        params["K"] = serialize::expansion_json(k);
        params["precision"] = precision;
        ordered_json record;
        record["type"] = "bracket_expansion";
        record["n"] = h.n_qubits;
        record["b"] = rational_str(b);
        record["result"] = serialize::expansion_json(m);
        record["xtype_empty"] = xtype_empty;
        record["arnold_kheshin"] = rational_str(pairing);
        ordered_json results = ordered_json::array();
        results.push_back(record);
        print_json_document("bracket", params, results, {});
    } else if (opts.common.format == "csv") {
        std::cout << "word,coefficient\n";
        for (const auto &entry : serialize::expansion_json(m)) {
            std::cout << entry["word"].get<std::string>() << ","
                      << entry["coefficient"].get<std::string>() << "\n";
        }
        std::cout << "\nxtype_empty,arnold_kheshin\n";
        std::cout << bool_str(xtype_empty) << "," << rational_str(pairing) << "\n";
    } else {
        std::cout << "[H, K] =";
        if (m.empty()) {
            std::cout << " 0";
        }
        for (const auto &entry : serialize::expansion_json(m)) {
            std::cout << " " << entry["coefficient"].get<std::string>() << "*"
                      << entry["word"].get<std::string>();
        }
        std::cout << "\n";
        std::cout << "xtype_empty=" << bool_str(xtype_empty) << "\n";
        std::cout << "arnold_kheshin=" << rational_str(pairing) << "\n";
    }
    return 0;
}

// ------------------------------------------------------------- code-search --

struct CodeSearchOpts {
    int n = 0;
    std::string predicate = "clifford";
    std::string method = "exhaustive";
    uint64_t seed = 1;
    int iterations = 100;
    int limit = 0;
    CommonOpts common;
};

int run_code_search(const CodeSearchOpts &opts) {
    Predicate pred = predicate_from_name(opts.predicate);
    std::vector<CodeSearchResult> codes;
    if (opts.method == "exhaustive") {
        codes = search_exhaustive(opts.n, pred);
    } else if (opts.method == "greedy") {
        codes.push_back(search_greedy(opts.n, pred, opts.seed, opts.iterations));
    } else {
        throw std::invalid_argument("code-search: method must be exhaustive or greedy");
    }

    size_t total = codes.size();
    int max_k = codes.empty() ? 0 : codes.front().code.dimension();
    size_t reported = total;
    if (opts.limit > 0 && static_cast<size_t>(opts.limit) < total) {
        reported = static_cast<size_t>(opts.limit);
    }

    if (opts.common.format == "json") {
        ordered_json params;
        params["n"] = opts.n;
        params["predicate"] = opts.predicate;
        params["method"] = opts.method;
        params["seed"] = opts.seed;
        params["iterations"] = opts.iterations;
        params["limit"] = opts.limit;
        params["precision"] = opts.common.precision;
        ordered_json results = ordered_json::array();
        ordered_json summary;
        summary["type"] = "code_search_summary";
        summary["n"] = opts.n;
        summary["predicate"] = opts.predicate;
        summary["method"] = opts.method;
        summary["maximal_count"] = total;
        summary["max_k"] = max_k;
        summary["reported"] = reported;
        results.push_back(summary);
        for (size_t i = 0; i < reported; i++) {
            results.push_back(serialize::code_result_json(codes[i]));
        }
        print_json_document("code-search", params, results, {});
    } else if (opts.common.format == "csv") {
        std::cout << "n,predicate,method,k,rate,rate_paper,distance,valid,seed,generators\n";
        for (size_t i = 0; i < reported; i++) {
            const CodeSearchResult &r = codes[i];
            std::cout << r.code.n_modes << "," << predicate_name(r.predicate) << "," << r.method
                      << "," << r.code.dimension() << "," << rational_str(r.rate) << ","
                      << rational_str(r.rate_paper) << "," << r.distance << "," << bool_str(r.valid)
                      << "," << r.seed << ",";
            for (size_t g = 0; g < r.code.generators.size(); g++) {
                std::cout << (g ? " " : "") << render_majorana(r.code.generators[g]);
            }
            std::cout << "\n";
        }
    } else {
        std::cout << "code search: n=" << opts.n << " predicate=" << opts.predicate
                  << " method=" << opts.method << "\n";
        std::cout << "maximal codes: " << total << ", best k=" << max_k << ", showing " << reported
                  << "\n";
        for (size_t i = 0; i < reported; i++) {
            const CodeSearchResult &r = codes[i];
            std::cout << "k=" << r.code.dimension() << " rate=" << rational_str(r.rate)
                      << " rate_paper=" << rational_str(r.rate_paper) << " distance=" << r.distance
                      << " generators:";
            for (const MajoranaString &g : r.code.generators) {
                std::cout << " " << render_majorana(g);
            }
            std::cout << "\n";
        }
    }
    return 0;
}

// ------------------------------------------------------------------- ricci --

struct RicciOpts {
    int n = 0;
    std::string b_text = "4";
    bool bg = false;
    std::string d_text;
    std::string vol_ref_text = "1";
    CommonOpts common;
};

int run_ricci(const RicciOpts &opts) {
    Rational b = parse_decimal_rational(opts.b_text);
    if (!opts.d_text.empty() && !opts.bg) {
        throw std::invalid_argument("ricci: --d requires --bg");
    }
    RicciSpectrum spectrum = ricci_tensor(opts.n, b);
    double vol_ref = to_double(parse_decimal_rational(opts.vol_ref_text));
    std::optional<Rational> d;
    if (!opts.d_text.empty()) {
        d = parse_decimal_rational(opts.d_text);
    }

    std::optional<BishopGromovReport> at_d;
    std::vector<BgComparisonRow> rows;
    if (opts.bg) {
        if (d.has_value()) {
            at_d = bishop_gromov_bound(spectrum, to_double(*d), vol_ref);
        }
        rows = bg_comparison(spectrum, vol_ref);
    }

    int precision = opts.common.precision;
    if (opts.common.format == "json") {
        ordered_json params;
        params["N"] = opts.n;
        params["b"] = rational_str(b);
        params["bg"] = opts.bg;
        params["d"] = d.has_value() ? ordered_json(rational_str(*d)) : ordered_json(nullptr);
        params["vol_ref"] = rational_str(parse_decimal_rational(opts.vol_ref_text));
        params["precision"] = precision;
        ordered_json results = ordered_json::array();
        results.push_back(serialize::ricci_json(spectrum, precision));
        if (at_d.has_value()) {
            results.push_back(serialize::bg_json(*at_d, precision));
        }
        for (const BgComparisonRow &row : rows) {
            results.push_back(serialize::bg_row_json(row, precision));
        }
        print_json_document("ricci", params, results, {});
    } else if (opts.common.format == "csv") {
        std::cout << "word,weight,value\n";
        for (size_t i = 0; i < spectrum.dimension; i++) {
            std::cout << render_word(spectrum.words[i]) << "," << spectrum.weights[i] << ","
                      << fmt_double(spectrum.diagonal_values[i], precision) << "\n";
        }
        if (opts.bg) {
            std::cout << "\nk,d,branch,kappa,log_vol_M,log_vol_ball,log_bound,bound,"
                         "theorem_bound,log_theorem_bound\n";
            if (at_d.has_value()) {
                std::cout << "-," << fmt_double(at_d->d, precision) << "," << at_d->branch << ","
                          << fmt_double(at_d->kappa, precision) << ","
                          << fmt_double(at_d->log_vol_M, precision) << ","
                          << fmt_double(at_d->log_vol_ball, precision) << ","
                          << fmt_double(at_d->log_bound, precision) << ","
                          << fmt_double(at_d->bound, precision) << ",-,-\n";
            }
            for (const BgComparisonRow &row : rows) {
                std::cout << row.k << "," << fmt_double(row.d, precision) << "," << row.bg.branch
                          << "," << fmt_double(row.bg.kappa, precision) << ","
                          << fmt_double(row.bg.log_vol_M, precision) << ","
                          << fmt_double(row.bg.log_vol_ball, precision) << ","
                          << fmt_double(row.bg.log_bound, precision) << ","
                          << fmt_double(row.bg.bound, precision) << ","
                          << big_str(row.theorem_bound_value) << ","
                          << fmt_double(row.log_theorem_bound, precision) << "\n";
            }
        }
    } else {
        std::cout << "ricci spectrum: N=" << opts.n << " b=" << rational_str(b)
                  << " dimension=" << spectrum.dimension << "\n";
        std::cout << "lambda_min=" << fmt_double(spectrum.lambda_min, precision)
                  << " lambda_max=" << fmt_double(spectrum.lambda_max, precision)
                  << " max_offdiagonal=" << fmt_double(spectrum.max_offdiagonal, precision) << "\n";
        for (size_t i = 0; i < spectrum.dimension; i++) {
            std::cout << "  " << render_word(spectrum.words[i]) << " (w=" << spectrum.weights[i]
                      << "): " << fmt_double(spectrum.diagonal_values[i], precision) << "\n";
        }
        if (at_d.has_value()) {
            std::cout << "bishop-gromov at d=" << fmt_double(at_d->d, precision) << ": branch="
                      << at_d->branch << " kappa=" << fmt_double(at_d->kappa, precision)
                      << " bound=" << fmt_double(at_d->bound, precision) << "\n";
        }
        for (const BgComparisonRow &row : rows) {
            std::cout << "k=" << row.k << " d=" << fmt_double(row.d, precision)
                      << ": bg_bound=" << fmt_double(row.bg.bound, precision) << " (" << row.bg.branch
                      << ") theorem_bound=" << big_str(row.theorem_bound_value) << "\n";
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exact Pauli/Majorana algebra, penalty-metric covering bounds, and curvature reports"};
    app.require_subcommand(1);

    BoundsOpts bounds_opts;
    CLI::App *bounds_cmd = app.add_subcommand("bounds", "Torus diameters and covering-number bounds");
    bounds_cmd->add_option("--N", bounds_opts.n, "Number of qubits")->required()->check(CLI::PositiveNumber);
    bounds_cmd->add_option("--k", bounds_opts.k_text, "Torus level, a single value or lo..hi")->required();
    bounds_cmd->add_option("--b", bounds_opts.b_text, "Penalty base (decimal)")->capture_default_str();
    bounds_cmd->add_option("--d-c,--d_c", bounds_opts.d_c_text, "Explicit diameter in place of the e_N proxy");
    add_common(bounds_cmd, bounds_opts.common);

    TowerOpts tower_opts;
    CLI::App *tower_cmd = app.add_subcommand("tower", "Cartan torus tower bases and geodesic checks");
    tower_cmd->add_option("--N", tower_opts.n, "Number of qubits")->required()->check(CLI::PositiveNumber);
    tower_cmd->add_option("--k", tower_opts.k, "Tower level")->required()->check(CLI::PositiveNumber);
    tower_cmd->add_option("--b", tower_opts.b_text, "Penalty base (decimal)")->capture_default_str();
    tower_cmd->add_flag("--verify-geodesic", tower_opts.verify_geodesic,
                        "Random exact check that tower directions are geodesic");
    tower_cmd->add_option("--samples", tower_opts.samples, "Samples for --verify-geodesic")->capture_default_str();
    tower_cmd->add_option("--seed", tower_opts.seed, "Seed for --verify-geodesic")->capture_default_str();
    add_common(tower_cmd, tower_opts.common);

    BracketOpts bracket_opts;
    CLI::App *bracket_cmd = app.add_subcommand("bracket", "Pauli word brackets and expansions");
    // Long-form --help only, so the short name stays free for the --h operand.
    bracket_cmd->set_help_flag("--help", "Print this help message and exit");
    bracket_cmd->add_option("--p", bracket_opts.p_text, "First word (pair mode)");
    bracket_cmd->add_option("--q", bracket_opts.q_text, "Second word (pair mode)");
    bracket_cmd->add_option("--h", bracket_opts.h_entries, "H terms WORD:COEF (expansion mode)");
    bracket_cmd->add_option("--K", bracket_opts.k_entries, "K terms WORD:COEF (expansion mode)");
    bracket_cmd->add_option("--b", bracket_opts.b_text, "Penalty base for the pairing")->capture_default_str();
    add_common(bracket_cmd, bracket_opts.common);

    CodeSearchOpts code_opts;
    CLI::App *code_cmd = app.add_subcommand("code-search", "Anticommuting Majorana linear codes");
    code_cmd->add_option("--n", code_opts.n, "Number of modes (2n generators)")->required();
    code_cmd->add_option("--predicate", code_opts.predicate, "Anticommutation predicate")
        ->check(CLI::IsMember({"paper", "clifford"}))
        ->capture_default_str();
    code_cmd->add_option("--method", code_opts.method, "Search method")
        ->check(CLI::IsMember({"exhaustive", "greedy"}))
        ->capture_default_str();
    code_cmd->add_option("--seed", code_opts.seed, "Greedy seed")->capture_default_str();
    code_cmd->add_option("--iterations", code_opts.iterations, "Greedy restarts")->capture_default_str();
    code_cmd->add_option("--limit", code_opts.limit, "Max codes to report (0 = all)")->capture_default_str();
    add_common(code_cmd, code_opts.common);

    RicciOpts ricci_opts;
    CLI::App *ricci_cmd = app.add_subcommand("ricci", "Ricci spectrum and Bishop-Gromov comparison");
    ricci_cmd->add_option("--N", ricci_opts.n, "Number of qubits")->required()->check(CLI::PositiveNumber);
    ricci_cmd->add_option("--b", ricci_opts.b_text, "Penalty base (decimal)")->capture_default_str();
    ricci_cmd->add_flag("--bg", ricci_opts.bg, "Emit Bishop-Gromov comparison records");
    ricci_cmd->add_option("--d", ricci_opts.d_text, "Ball radius for an explicit comparison record");
    ricci_cmd->add_option("--vol-ref,--vol_ref", ricci_opts.vol_ref_text,
                          "Reference volume factor for vol(M)")->capture_default_str();
    add_common(ricci_cmd, ricci_opts.common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (bounds_cmd->parsed()) {
            return run_bounds(bounds_opts);
        }
        if (tower_cmd->parsed()) {
            return run_tower(tower_opts);
        }
        if (bracket_cmd->parsed()) {
            return run_bracket(bracket_opts);
        }
        if (code_cmd->parsed()) {
            return run_code_search(code_opts);
        }
        if (ricci_cmd->parsed()) {
            return run_ricci(ricci_opts);
        }
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
