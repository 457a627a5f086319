#pragma once

#include <string>

#include "vtx/laurent.hpp"

namespace vtx {

// Rational function in x = q^{1/2}, kept in a canonical form so equality is
// plain structural comparison:
//   - numerator and denominator share no polynomial factor,
//   - the denominator has min exponent 0, integer coefficients with content 1
//     and a positive leading coefficient,
//   - all monomial and rational content lives in the numerator.
class QRat {
public:
    QRat() = default;  // zero
    QRat(const Rational& c);
    QRat(long long c);
    explicit QRat(const LaurentPoly& num);
    QRat(const LaurentPoly& num, const LaurentPoly& den);

    static QRat monomial(const Rational& c, int exp);  // c * x^exp

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    QRat operator-() const;
    QRat& operator+=(const QRat& o);
    QRat& operator-=(const QRat& o);
    QRat& operator*=(const QRat& o);
    QRat& operator/=(const QRat& o);
    friend QRat operator+(QRat a, const QRat& b) { return a += b; }
    friend QRat operator-(QRat a, const QRat& b) { return a -= b; }
    friend QRat operator*(QRat a, const QRat& b) { return a *= b; }
    friend QRat operator/(QRat a, const QRat& b) { return a /= b; }

    QRat inverse() const;
    QRat pow(int k) const;

    // Substitute x -> x^{-1}.
    QRat flip() const;

    bool operator==(const QRat& o) const = default;

    // "num" or "(num)/(den)"; single-term numerators are left bare.
    std::string str() const;
    static QRat parse(const std::string& text);

private:
    void normalize();
    LaurentPoly num_;
    LaurentPoly den_ = LaurentPoly(1);
};

}  // namespace vtx
