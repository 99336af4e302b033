#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "tfw/errors.hpp"

namespace tfw {

using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

// Parses "p", "p/q", or a plain decimal like "-1.25".
Rational parse_rational(const std::string& s);

std::string rat_str(const Rational& q);

double rat_d(const Rational& q);

inline int sgn(const Rational& q) { return sgn(q.get_num()); }

// floor(q) as a Rational integer.
Rational rat_floor(const Rational& q);

// q mod m, result in [0, m). m > 0.
Rational rat_mod(const Rational& q, const Rational& m);

} // namespace tfw
