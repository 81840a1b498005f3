#pragma once

#include <gmpxx.h>
#include <string>

namespace rectline {

// Exact rational coefficients. mpq_class keeps values canonical
// (reduced, positive denominator, 0 = 0/1) after every operation.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}

// "num" when the denominator is 1, "num/den" otherwise.
inline std::string rational_to_string(const Rational& r) {
    if (r.get_den() == 1) return r.get_num().get_str();
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline Rational rational_from_string(const std::string& s) {
    Rational r(s);
    r.canonicalize();
    return r;
}

}  // namespace rectline
