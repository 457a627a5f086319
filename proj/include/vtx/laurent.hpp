#pragma once

#include <string>
#include <vector>

#include "vtx/rational.hpp"

namespace vtx {

// Laurent polynomial in the formal variable x (x^2 = q) with exact rational
// coefficients. Stored dense over its exponent span; the zero polynomial is
// the empty span. Leading and trailing stored coefficients are nonzero.
class LaurentPoly {
public:
    LaurentPoly() = default;
    explicit LaurentPoly(const Rational& c);
    explicit LaurentPoly(long long c);
    static LaurentPoly monomial(const Rational& c, int exp);

    static LaurentPoly parse(const std::string& text);
    std::string str() const;

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    int min_exp() const;  // requires nonzero
    int max_exp() const;  // requires nonzero
    Rational coeff(int exp) const;
    int term_count() const;

    LaurentPoly shifted(int k) const;  // multiply by x^k

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly& operator*=(const Rational& c);
    LaurentPoly pow(unsigned k) const;

    bool operator==(const LaurentPoly& o) const = default;

    // Polynomial helpers on the x^0-based parts (used for normalization).

    // Exact division; throws if not divisible or divisor is zero.
    static LaurentPoly div_exact(const LaurentPoly& a, const LaurentPoly& b);

    // Monic gcd of the polynomial parts (monomial factors ignored);
    // gcd(0, b) = b. Result has min_exp 0 and leading coefficient 1
    // unless both inputs are zero.
    static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

    // Rational c such that (*this)/c has integer coefficients with content 1
    // and positive leading coefficient; requires nonzero.
    Rational signed_content() const;

private:
    void trim();
    // coeffs_[i] is the coefficient of x^{lead_ + i}.
    int lead_ = 0;
    std::vector<Rational> coeffs_;
};

}  // namespace vtx
