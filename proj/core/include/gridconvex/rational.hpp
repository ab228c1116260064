#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gridconvex {

// Exact arbitrary-precision rational scalar. mpq_class keeps values in
// canonical form (denominator > 0, gcd(|num|, den) = 1) through all
// arithmetic, which is exactly the invariant we need for coordinates.
using Rational = mpq_class;

// Parses "p" or "p/q" with integer p and nonzero integer q.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty rational literal");
    mpq_class v;
    if (v.set_str(text, 10) != 0)
        throw std::invalid_argument("bad rational literal: " + text);
    if (v.get_den() == 0)
        throw std::invalid_argument("zero denominator: " + text);
    v.canonicalize();
    return v;
}

// Decimal-free exact form, "p" or "p/q" with q > 1.
inline std::string to_string(const Rational& v) { return v.get_str(); }

inline int sign(const Rational& v) { return sgn(v); }

inline Rational rational_pow(const Rational& base, unsigned exp) {
    Rational acc(1);
    for (unsigned i = 0; i < exp; ++i) acc *= base;
    return acc;
}

inline Rational rational_abs(const Rational& v) { return v < 0 ? Rational(-v) : v; }

}  // namespace gridconvex
