#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <string>

namespace cyclo {

// Exact scalar field. mpq_class keeps values canonical: gcd(|num|,den)=1,
// den >= 1, zero stored as 0/1.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// |a| < |b|
inline bool abs_less(const Rational& a, const Rational& b) {
    return cmp(abs(a), abs(b)) < 0;
}

inline std::string to_string(const Rational& q) {
    return q.get_str();
}

// Parses "p/q" or "p"; throws std::invalid_argument on garbage.
Rational parse_rational(const std::string& s);

} // namespace cyclo
