#pragma once

#include <string>
#include <vector>

#include "vtx/qrat.hpp"
#include "vtx/rational.hpp"

namespace vtx {

// Truncated Laurent series in one formal variable u, with exact rational
// coefficients. Coefficients are valid (exactly known) for exponents up to
// order() inclusive; asking beyond that throws.
class USeries {
public:
    USeries() = default;  // zero, order -1 (knows nothing)
    static USeries zero(int order);
    static USeries constant(const Rational& c, int order);
    static USeries monomial(const Rational& c, int k, int order);
    // exp(a*u) truncated at the given order.
    static USeries exp_linear(const Rational& a, int order);

    int order() const { return order_; }
    bool is_zero() const;
    // Lowest exponent that may carry a nonzero coefficient (order()+1 for a
    // zero series).
    int lead_exp() const { return effective_lead(); }
    Rational coeff(int k) const;  // throws if k > order()

    USeries operator-() const;
    friend USeries operator+(const USeries& a, const USeries& b);
    friend USeries operator-(const USeries& a, const USeries& b);
    friend USeries operator*(const USeries& a, const USeries& b);
    USeries& operator+=(const USeries& o) { return *this = *this + o; }
    USeries& operator*=(const USeries& o) { return *this = *this * o; }
    USeries scaled(const Rational& c) const;

    // u -> n*u (n may be zero or negative).
    USeries substituted_scaled(long long n) const;

    // Multiplicative inverse; requires a nonzero lowest coefficient.
    USeries inverse() const;

    // Equality of all coefficients up to min(order, o.order); at least
    // through `through` which must be representable by both.
    bool equal_through(const USeries& o, int through) const;

    std::string str(const std::string& var = "u") const;

private:
    void trim_front();
    int effective_lead() const;  // lead_ for nonzero, order_+1 for zero
    // coeffs_[i] is the coefficient of u^{lead_+i}; entries beyond order_ are
    // never stored.
    int lead_ = 0;
    int order_ = -1;
    std::vector<Rational> coeffs_;
};

// Substitute x = e^{u/2} into an exact rational function of x and expand at
// u = 0 through the requested order. Poles at x = 1 become u-poles.
USeries expand_q_exp(const QRat& f, int order);

}  // namespace vtx
