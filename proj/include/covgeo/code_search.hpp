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

#ifndef COVGEO_CODE_SEARCH_HPP
#define COVGEO_CODE_SEARCH_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "covgeo/bigmath.hpp"
#include "covgeo/majorana.hpp"
#include "covgeo/rng.hpp"

namespace covgeo {

enum class Predicate {
    kPaper,     // w(x) + w(y) - overlap(x, y) odd
    kClifford,  // w(x) * w(y) - overlap(x, y) odd
};

inline std::string predicate_name(Predicate p) {
    return p == Predicate::kPaper ? "paper" : "clifford";
}

inline Predicate predicate_from_name(const std::string &name) {
    if (name == "paper") {
        return Predicate::kPaper;
    }
    if (name == "clifford") {
        return Predicate::kClifford;
    }
    throw std::invalid_argument("unknown predicate: " + name);
}

namespace detail {
inline bool anticommute_bits(Predicate p, uint64_t x, uint64_t y) {
    int wx = std::popcount(x);
    int wy = std::popcount(y);
    int overlap = std::popcount(x & y);
    int value = (p == Predicate::kPaper) ? wx + wy - overlap : wx * wy - overlap;
    return (value & 1) != 0;
}
}  // namespace detail

// Sum-parity condition behind the "paper" predicate:
// w(x) + w(y) - overlap(x, y) odd.
inline bool anticommute_paper(const MajoranaString &x, const MajoranaString &y) {
    if (x.n_modes != y.n_modes) {
        throw std::invalid_argument("anticommute_paper: mode count mismatch");
    }
    return detail::anticommute_bits(Predicate::kPaper, x.bits, y.bits);
}

// The Clifford monomial relation: gamma-monomials x, y anticommute iff
// w(x) w(y) - overlap(x, y) is odd. The two conditions agree exactly when
// both weights are even; anticommute_paper is kept verbatim alongside.
inline bool anticommute_clifford(const MajoranaString &x, const MajoranaString &y) {
    if (x.n_modes != y.n_modes) {
        throw std::invalid_argument("anticommute_clifford: mode count mismatch");
    }
    return detail::anticommute_bits(Predicate::kClifford, x.bits, y.bits);
}

struct LinearCode {
    int n_modes = 0;
    std::vector<MajoranaString> generators;

    int dimension() const {
        return static_cast<int>(generators.size());
    }
};

namespace detail {
// Reduced row-echelon form over F_2, pivot columns ascending from bit 0
// (gamma_1). Unique per subspace: the canonical representative used to
// deduplicate and order codes.
inline std::vector<uint64_t> rref(std::vector<uint64_t> rows) {
    size_t pivot_row = 0;
    for (int col = 0; col < 64 && pivot_row < rows.size(); col++) {
        uint64_t mask = 1ULL << col;
        size_t found = pivot_row;
        while (found < rows.size() && !(rows[found] & mask)) {
            found++;
        }
        if (found == rows.size()) {
            continue;
        }
        std::swap(rows[pivot_row], rows[found]);
        for (size_t r = 0; r < rows.size(); r++) {
            if (r != pivot_row && (rows[r] & mask)) {
                rows[r] ^= rows[pivot_row];
            }
        }
        pivot_row++;
    }
    rows.resize(pivot_row);  // drops dependent (zero) rows
    return rows;
}

inline std::vector<uint64_t> span_of(const std::vector<uint64_t> &generators) {
    std::vector<uint64_t> span{0};
    for (uint64_t g : generators) {
        size_t size = span.size();
        for (size_t i = 0; i < size; i++) {
            span.push_back(span[i] ^ g);
        }
    }
    std::sort(span.begin(), span.end());
    span.erase(std::unique(span.begin(), span.end()), span.end());
    return span;
}

inline bool span_contains(const std::vector<uint64_t> &sorted_span, uint64_t v) {
    return std::binary_search(sorted_span.begin(), sorted_span.end(), v);
}

inline bool pairs_valid(Predicate pred, const std::vector<uint64_t> &span) {
    for (size_t i = 0; i < span.size(); i++) {
        if (span[i] == 0) {
            continue;
        }
        for (size_t j = i + 1; j < span.size(); j++) {
            if (!anticommute_bits(pred, span[i], span[j])) {
                return false;
            }
        }
    }
    return true;
}

// Validity of span extended by v, checking only the pairs that are new.
inline bool extension_valid(Predicate pred, const std::vector<uint64_t> &span, uint64_t v) {
    std::vector<uint64_t> added;
    added.reserve(span.size());
    for (uint64_t s : span) {
        added.push_back(s ^ v);
    }
    for (uint64_t a : added) {
        for (uint64_t s : span) {
            if (s != 0 && !anticommute_bits(pred, a, s)) {
                return false;
            }
        }
    }
    for (size_t i = 0; i < added.size(); i++) {
        for (size_t j = i + 1; j < added.size(); j++) {
            if (!anticommute_bits(pred, added[i], added[j])) {
                return false;
            }
        }
    }
    return true;
}
}  // namespace detail

inline int f2_rank(const LinearCode &code) {
    std::vector<uint64_t> rows;
    rows.reserve(code.generators.size());
    for (const MajoranaString &g : code.generators) {
        rows.push_back(g.bits);
    }
    return static_cast<int>(detail::rref(rows).size());
}

// Predicate over every unordered pair of distinct nonzero codewords;
// self-pairs are exempt ([x, x] = 0 regardless). The pair check is quadratic
// in 2^k, hence the capacity cap.
inline bool code_valid(const LinearCode &code, Predicate pred) {
    if (code.dimension() > 12) {
        throw std::domain_error("code_valid: pair enumeration capped at k <= 12");
    }
    std::vector<uint64_t> rows;
    for (const MajoranaString &g : code.generators) {
        if (g.n_modes != code.n_modes) {
            throw std::invalid_argument("code_valid: generator mode count mismatch");
        }
        rows.push_back(g.bits);
    }
    return detail::pairs_valid(pred, detail::span_of(rows));
}

// Minimum weight over the 2^k - 1 nonzero codewords, by Gray-code sweep.
inline int code_distance(const LinearCode &code) {
    int k = code.dimension();
    if (k < 1) {
        throw std::domain_error("code_distance: need at least one generator");
    }
    if (k > 24) {
        throw std::domain_error("code_distance: enumeration capped at k <= 24");
    }
    uint64_t current = 0;
    int best = 64;
    for (uint64_t i = 1; i < (1ULL << k); i++) {
        current ^= code.generators[static_cast<size_t>(std::countr_zero(i))].bits;
        best = std::min(best, std::popcount(current));
    }
    return best;
}

struct CodeSearchResult {
    LinearCode code;
    Predicate predicate = Predicate::kClifford;
    Rational rate;        // k / 2n
    Rational rate_paper;  // k / n, the alternate normalization
    int distance = 0;
    bool valid = false;
    std::string method;
    uint64_t seed = 0;  // greedy only
};

namespace detail {
inline CodeSearchResult make_result(int n, Predicate pred, const std::vector<uint64_t> &canonical_gens,
                                    const std::string &method, uint64_t seed) {
    CodeSearchResult result;
    result.code.n_modes = n;
    for (uint64_t g : canonical_gens) {
        result.code.generators.emplace_back(n, g);
    }
    result.predicate = pred;
    int k = static_cast<int>(canonical_gens.size());
    result.rate = Rational(k, 2 * n);
    result.rate_paper = Rational(k, n);
    result.distance = code_distance(result.code);
    result.valid = true;
    result.method = method;
    result.seed = seed;
    return result;
}

// Total order for reporting: k desc, distance desc, lexicographically
// smallest canonical generator matrix first.
inline bool result_order(const CodeSearchResult &a, const CodeSearchResult &b) {
    if (a.code.dimension() != b.code.dimension()) {
        return a.code.dimension() > b.code.dimension();
    }
    if (a.distance != b.distance) {
        return a.distance > b.distance;
    }
    std::vector<uint64_t> ga, gb;
    for (const auto &g : a.code.generators) {
        ga.push_back(g.bits);
    }
    for (const auto &g : b.code.generators) {
        gb.push_back(g.bits);
    }
    return ga < gb;
}
}  // namespace detail

// All maximal valid codes (no valid one-vector extension) in canonical RREF
// form. Validity is hereditary under subspace inclusion, so breadth-first
// growth over canonical representatives visits every valid subspace.
inline std::vector<CodeSearchResult> search_exhaustive(int n, Predicate pred) {
    if (n == 0) {
        return {};
    }
    if (n < 0 || n > 4) {
        throw std::domain_error("search_exhaustive: n capped at 4; use search_greedy beyond");
    }
    uint64_t v_count = 1ULL << (2 * n);

    struct Node {
        std::vector<uint64_t> gens;  // canonical RREF
        std::vector<uint64_t> span;  // sorted
    };
    std::map<std::vector<uint64_t>, Node> level;
    level.emplace(std::vector<uint64_t>{}, Node{{}, {0}});
    std::vector<CodeSearchResult> maximal;

    while (!level.empty()) {
        std::map<std::vector<uint64_t>, Node> next;
        for (const auto &[gens, node] : level) {
            bool extended = false;
            for (uint64_t v = 1; v < v_count; v++) {
                if (detail::span_contains(node.span, v)) {
                    continue;
                }
                std::vector<uint64_t> grown = node.gens;
                grown.push_back(v);
                std::vector<uint64_t> canon = detail::rref(std::move(grown));
                if (next.count(canon)) {
                    extended = true;
                    continue;
                }
                if (detail::extension_valid(pred, node.span, v)) {
                    extended = true;
                    Node child;
                    child.gens = canon;
                    child.span = node.span;
                    size_t size = child.span.size();
                    for (size_t i = 0; i < size; i++) {
                        child.span.push_back(child.span[i] ^ v);
                    }
                    std::sort(child.span.begin(), child.span.end());
                    next.emplace(std::move(canon), std::move(child));
                }
            }
            if (!extended && !node.gens.empty()) {
                maximal.push_back(detail::make_result(n, pred, node.gens, "exhaustive", 0));
            }
        }
        level = std::move(next);
    }
    std::sort(maximal.begin(), maximal.end(), detail::result_order);
    return maximal;
}

// Randomized greedy: per iteration, a seeded shuffle of all nonzero vectors
// is scanned once, adding any vector that keeps the enlarged code valid.
// A single pass is enough: validity is hereditary, so a vector rejected
// against a smaller code stays rejected against every larger one. Best of
// all iterations under the (k, distance, lex) order; deterministic for a
// fixed seed, and iteration substreams merge associatively.
inline CodeSearchResult search_greedy(int n, Predicate pred, uint64_t seed, int iterations) {
    if (n < 1 || n > 10) {
        throw std::domain_error("search_greedy: n must be in [1, 10] (candidate pool is 4^n)");
    }
    if (iterations < 1) {
        throw std::domain_error("search_greedy: iterations must be positive");
    }
    uint64_t v_count = 1ULL << (2 * n);
    CodeSearchResult best;
    bool have_best = false;
    for (int it = 0; it < iterations; it++) {
        SplitMix64 rng(substream_seed(seed, static_cast<uint64_t>(it)));
        std::vector<uint64_t> candidates;
        candidates.reserve(v_count - 1);
        for (uint64_t v = 1; v < v_count; v++) {
            candidates.push_back(v);
        }
        rng.shuffle(candidates);

        std::vector<uint64_t> gens;
        std::vector<uint64_t> span{0};
        for (uint64_t v : candidates) {
            if (detail::span_contains(span, v)) {
                continue;
            }
            if (!detail::extension_valid(pred, span, v)) {
                continue;
            }
            gens.push_back(v);
            size_t size = span.size();
            for (size_t i = 0; i < size; i++) {
                span.push_back(span[i] ^ v);
            }
            std::sort(span.begin(), span.end());
        }
        if (gens.empty()) {
            continue;
        }
        CodeSearchResult candidate = detail::make_result(n, pred, detail::rref(gens), "greedy", seed);
        if (!have_best || detail::result_order(candidate, best)) {
            best = candidate;
            have_best = true;
        }
    }
    if (!have_best) {
        throw std::logic_error("search_greedy: no valid code found (single vectors are always valid)");
    }
    return best;
}

}  // namespace covgeo

#endif  // COVGEO_CODE_SEARCH_HPP
