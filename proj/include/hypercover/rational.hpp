// rational.hpp - Exact rational arithmetic on top of GMP.
#pragma once

#include <gmpxx.h>

#include <string>

#include "hypercover/errors.hpp"

namespace hypercover {

// Arbitrary-precision rational, always canonical (reduced, denominator > 0).
// mpq_class keeps results of arithmetic canonical; constructors from a
// numerator/denominator pair must go through make_rational below.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    if (den == 0) throw InputError("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Accepts "p/q" or "p" with optional sign.
inline Rational parse_rational(const std::string& text) {
    if (text.empty()) throw InputError("empty rational literal");
    Rational q;
    if (q.set_str(text, 10) != 0)
        throw InputError("bad rational literal: '" + text + "'");
    if (q.get_den() == 0) throw InputError("rational with zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

// Canonical "p/q" rendering, including q = 1 (so "0/1", "3/1", "7/2").
inline std::string format_rational(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

inline bool is_integral(const Rational& q) { return q.get_den() == 1; }

}  // namespace hypercover
