#include "vtx/qrat.hpp"

#include <stdexcept>

namespace vtx {

QRat::QRat(const Rational& c) : num_(c) {}

QRat::QRat(long long c) : num_(c) {}

QRat::QRat(const LaurentPoly& num) : num_(num) {}

QRat::QRat(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    normalize();
}

QRat QRat::monomial(const Rational& c, int exp) {
    QRat r;
    r.num_ = LaurentPoly::monomial(c, exp);
    return r;
}

void QRat::normalize() {
    if (den_.is_zero()) throw std::domain_error("qrat: zero denominator");
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    int num_shift = num_.min_exp();
    int den_shift = den_.min_exp();
    LaurentPoly n0 = num_.shifted(-num_shift);
    LaurentPoly d0 = den_.shifted(-den_shift);
    LaurentPoly g = LaurentPoly::gcd(n0, d0);
    if (!g.is_one()) {
        n0 = LaurentPoly::div_exact(n0, g);
        d0 = LaurentPoly::div_exact(d0, g);
    }
    Rational content = d0.signed_content();
    Rational inv_content = 1 / content;
    d0 *= inv_content;
    n0 *= inv_content;
    num_ = n0.shifted(num_shift - den_shift);
    den_ = d0;
}

QRat QRat::operator-() const {
    QRat r = *this;
    r.num_ = -r.num_;
    return r;
}

QRat& QRat::operator+=(const QRat& o) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    normalize();
    return *this;
}

QRat& QRat::operator-=(const QRat& o) { return *this += -o; }

QRat& QRat::operator*=(const QRat& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    normalize();
    return *this;
}

QRat& QRat::operator/=(const QRat& o) {
    if (o.is_zero()) throw std::domain_error("qrat: division by zero");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

QRat QRat::inverse() const {
    if (is_zero()) throw std::domain_error("qrat: inverse of zero");
    QRat r;
    r.num_ = den_;
    r.den_ = num_;
    r.normalize();
    return r;
}

QRat QRat::pow(int k) const {
    if (k < 0) return inverse().pow(-k);
    QRat r(Rational(1));
    QRat base = *this;
    unsigned e = static_cast<unsigned>(k);
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

namespace {

LaurentPoly flip_poly(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    LaurentPoly out;
    for (int e = p.min_exp(); e <= p.max_exp(); ++e) {
        Rational c = p.coeff(e);
        if (c != 0) out += LaurentPoly::monomial(c, -e);
    }
    return out;
}

}  // namespace

QRat QRat::flip() const {
    if (is_zero()) return {};
    return QRat(flip_poly(num_), flip_poly(den_));
}

std::string QRat::str() const {
    if (den_.is_one()) {
        return num_.str();
    }
    std::string n = num_.term_count() > 1 ? "(" + num_.str() + ")" : num_.str();
    return n + "/(" + den_.str() + ")";
}

QRat QRat::parse(const std::string& text) {
    // Split at the top-level '/': parenthesized groups hide their slashes.
    int depth = 0;
    std::size_t slash = std::string::npos;
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch == '(') ++depth;
        else if (ch == ')') --depth;
        else if (ch == '/' && depth == 0) {
            // A coefficient slash is always directly between digits.
            bool digit_before = i > 0 && std::isdigit(static_cast<unsigned char>(text[i - 1]));
            bool digit_after =
                i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]));
            if (digit_before && digit_after) continue;
            if (slash != std::string::npos)
                throw std::invalid_argument("qrat: more than one top-level '/'");
            slash = i;
        }
    }
    auto strip = [](std::string s) {
        std::size_t a = s.find_first_not_of(" \t");
        std::size_t b = s.find_last_not_of(" \t");
        if (a == std::string::npos) return std::string();
        s = s.substr(a, b - a + 1);
        if (s.size() >= 2 && s.front() == '(' && s.back() == ')')
            s = s.substr(1, s.size() - 2);
        return s;
    };
    if (slash == std::string::npos) {
        return QRat(LaurentPoly::parse(strip(text)));
    }
    LaurentPoly n = LaurentPoly::parse(strip(text.substr(0, slash)));
    LaurentPoly d = LaurentPoly::parse(strip(text.substr(slash + 1)));
    return QRat(n, d);
}

}  // namespace vtx
