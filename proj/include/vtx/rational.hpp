#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace vtx {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw std::domain_error("rational: zero denominator");
    Rational r(Integer(num), Integer(den));
    r.canonicalize();
    return r;
}

inline std::string to_string(const Integer& z) { return z.get_str(); }

// Canonical form: "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (r.set_str(text, 10) != 0) throw std::invalid_argument("rational: bad literal '" + text + "'");
    if (r.get_den() == 0) throw std::domain_error("rational: zero denominator");
    r.canonicalize();
    return r;
}

inline Integer factorial(int n) {
    Integer f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

// (2k-1)!! with the usual (-1)!! = 1 convention (k = 0).
inline Integer double_factorial_odd(int k) {
    Integer f = 1;
    for (int i = 1; i <= k; ++i) f *= 2 * i - 1;
    return f;
}

}  // namespace vtx
