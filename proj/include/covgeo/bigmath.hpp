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

#ifndef COVGEO_BIGMATH_HPP
#define COVGEO_BIGMATH_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace covgeo {

using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigCount binomial(int64_t n, int64_t k) {
    if (k < 0 || k > n) {
        return 0;
    }
    if (k > n - k) {
        k = n - k;
    }
    BigCount result = 1;
    for (int64_t i = 1; i <= k; i++) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

// F(k, N) = sum_{i=1..k} binom(N, i); the dimension of the k-body torus.
inline BigCount cumulative_binomial(int64_t k, int64_t n) {
    if (k < 1 || k > n) {
        throw std::domain_error("cumulative_binomial: require 1 <= k <= N");
    }
    BigCount total = 0;
    BigCount term = 1;
    for (int64_t i = 1; i <= k; i++) {
        term *= n - i + 1;
        term /= i;
        total += term;
    }
    return total;
}

// Floor of the square root; exact for arbitrary-size integers.
inline BigCount isqrt_floor(const BigCount &n) {
    if (n < 0) {
        throw std::domain_error("isqrt_floor: negative input");
    }
    BigCount r = boost::multiprecision::sqrt(n);
    while (r * r > n) {
        r -= 1;
    }
    while ((r + 1) * (r + 1) <= n) {
        r += 1;
    }
    return r;
}

inline BigCount pow_big(const BigCount &base, uint64_t e) {
    BigCount result = 1;
    BigCount b = base;
    while (e) {
        if (e & 1) {
            result *= b;
        }
        b *= b;
        e >>= 1;
    }
    return result;
}

inline Rational pow_rational(const Rational &base, int64_t e) {
    if (e < 0) {
        Rational inv = Rational(1) / base;
        return pow_rational(inv, -e);
    }
    Rational result = 1;
    Rational b = base;
    uint64_t u = static_cast<uint64_t>(e);
    while (u) {
        if (u & 1) {
            result *= b;
        }
        b *= b;
        u >>= 1;
    }
    return result;
}

// Parses a plain decimal string ("4", "-2.5", "0.125") into an exact rational.
// Exponents and other float syntax are rejected: every accepted value is
// exactly representable and stays on the exact arithmetic path.
inline Rational parse_decimal_rational(const std::string &text) {
    if (text.empty()) {
        throw std::invalid_argument("empty decimal string");
    }
    size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        pos++;
    }
    BigCount numerator = 0;
    BigCount denominator = 1;
    bool any_digit = false;
    bool seen_dot = false;
    for (; pos < text.size(); pos++) {
        char c = text[pos];
        if (c == '.') {
            if (seen_dot) {
                throw std::invalid_argument("malformed decimal: " + text);
            }
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            numerator = numerator * 10 + (c - '0');
            if (seen_dot) {
                denominator *= 10;
            }
            any_digit = true;
        } else {
            throw std::invalid_argument("malformed decimal: " + text);
        }
    }
    if (!any_digit) {
        throw std::invalid_argument("malformed decimal: " + text);
    }
    Rational value(numerator, denominator);
    return negative ? -value : value;
}

inline bool is_integer(const Rational &r) {
    return boost::multiprecision::denominator(r) == 1;
}

inline double to_double(const Rational &r) {
    return r.convert_to<double>();
}

inline long double to_long_double(const Rational &r) {
    return r.convert_to<long double>();
}

// Natural log of a positive big integer, via its bit length; accurate to
// long double precision for any size.
inline long double log_big(const BigCount &n) {
    if (n <= 0) {
        throw std::domain_error("log_big: nonpositive input");
    }
    size_t bits = boost::multiprecision::msb(n) + 1;
    if (bits <= 62) {
        return std::log(static_cast<long double>(n.convert_to<uint64_t>()));
    }
    // Keep the top 62 bits as a mantissa and add the dropped exponent back.
    size_t shift = bits - 62;
    BigCount top = n >> shift;
    long double mantissa = static_cast<long double>(top.convert_to<uint64_t>());
    return std::log(mantissa) + static_cast<long double>(shift) * std::log(2.0L);
}

inline long double log_rational(const Rational &r) {
    if (r <= 0) {
        throw std::domain_error("log_rational: nonpositive input");
    }
    return log_big(BigCount(boost::multiprecision::numerator(r))) -
           log_big(BigCount(boost::multiprecision::denominator(r)));
}

// --- log-domain companions -------------------------------------------------
//
// The exact big-integer path above is authoritative; these are the overflow-
// proof mirrors used for large N and cross-checked against the exact path in
// the tests.

inline long double log_binomial(int64_t n, int64_t k) {
    if (k < 0 || k > n) {
        return -INFINITY;
    }
    return std::lgammal(static_cast<long double>(n) + 1) -
           std::lgammal(static_cast<long double>(k) + 1) -
           std::lgammal(static_cast<long double>(n - k) + 1);
}

inline long double logaddexp(long double a, long double b) {
    if (a == -INFINITY) {
        return b;
    }
    if (b == -INFINITY) {
        return a;
    }
    long double hi = a > b ? a : b;
    long double lo = a > b ? b : a;
    return hi + std::log1p(std::exp(lo - hi));
}

inline long double logsumexp(const std::vector<long double> &terms) {
    long double acc = -INFINITY;
    for (long double t : terms) {
        acc = logaddexp(acc, t);
    }
    return acc;
}

}  // namespace covgeo

#endif  // COVGEO_BIGMATH_HPP
