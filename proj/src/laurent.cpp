#include "vtx/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace vtx {

LaurentPoly::LaurentPoly(const Rational& c) {
    if (c != 0) coeffs_.push_back(c);
}

LaurentPoly::LaurentPoly(long long c) : LaurentPoly(Rational(static_cast<long>(c))) {}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exp) {
    LaurentPoly p;
    if (c != 0) {
        p.lead_ = exp;
        p.coeffs_.push_back(c);
    }
    return p;
}

bool LaurentPoly::is_one() const {
    return coeffs_.size() == 1 && lead_ == 0 && coeffs_[0] == 1;
}

int LaurentPoly::min_exp() const {
    if (is_zero()) throw std::logic_error("laurent: min_exp of zero");
    return lead_;
}

int LaurentPoly::max_exp() const {
    if (is_zero()) throw std::logic_error("laurent: max_exp of zero");
    return lead_ + static_cast<int>(coeffs_.size()) - 1;
}

Rational LaurentPoly::coeff(int exp) const {
    int i = exp - lead_;
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

int LaurentPoly::term_count() const {
    int n = 0;
    for (const Rational& c : coeffs_)
        if (c != 0) ++n;
    return n;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly p = *this;
    if (!p.is_zero()) p.lead_ += k;
    return p;
}

void LaurentPoly::trim() {
    std::size_t i = 0;
    while (i < coeffs_.size() && coeffs_[i] == 0) ++i;
    std::size_t j = coeffs_.size();
    while (j > i && coeffs_[j - 1] == 0) --j;
    if (i == j) {
        coeffs_.clear();
        lead_ = 0;
        return;
    }
    if (i > 0 || j < coeffs_.size()) {
        coeffs_ = std::vector<Rational>(coeffs_.begin() + static_cast<long>(i),
                                        coeffs_.begin() + static_cast<long>(j));
        lead_ += static_cast<int>(i);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly p = *this;
    for (Rational& c : p.coeffs_) c = -c;
    return p;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    int lo = std::min(lead_, o.lead_);
    int hi = std::max(max_exp(), o.max_exp());
    std::vector<Rational> out(static_cast<std::size_t>(hi - lo + 1), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[static_cast<std::size_t>(lead_ - lo) + i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        out[static_cast<std::size_t>(o.lead_ - lo) + i] += o.coeffs_[i];
    lead_ = lo;
    coeffs_ = std::move(out);
    trim();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    LaurentPoly p;
    p.lead_ = a.lead_ + b.lead_;
    p.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
            p.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    p.trim();
    return p;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) { return *this = *this * o; }

LaurentPoly& LaurentPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        lead_ = 0;
        return *this;
    }
    for (Rational& v : coeffs_) v *= c;
    return *this;
}

LaurentPoly LaurentPoly::pow(unsigned k) const {
    LaurentPoly r(Rational(1));
    LaurentPoly base = *this;
    while (k) {
        if (k & 1u) r *= base;
        base *= base;
        k >>= 1u;
    }
    return r;
}

LaurentPoly LaurentPoly::div_exact(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("laurent: division by zero");
    if (a.is_zero()) return {};
    // Work with x^0-based copies; restore the exponent shift afterwards.
    int shift = a.lead_ - b.lead_;
    std::vector<Rational> rem = a.coeffs_;
    const std::vector<Rational>& div = b.coeffs_;
    int dr = static_cast<int>(rem.size()) - 1;
    int db = static_cast<int>(div.size()) - 1;
    if (dr < db) throw std::domain_error("laurent: not divisible");
    std::vector<Rational> quot(static_cast<std::size_t>(dr - db + 1), Rational(0));
    for (int k = dr - db; k >= 0; --k) {
        Rational c = rem[static_cast<std::size_t>(k + db)] / div[static_cast<std::size_t>(db)];
        quot[static_cast<std::size_t>(k)] = c;
        if (c == 0) continue;
        for (int j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(k + j)] -= c * div[static_cast<std::size_t>(j)];
    }
    for (const Rational& c : rem)
        if (c != 0) throw std::domain_error("laurent: not divisible");
    LaurentPoly q;
    q.lead_ = shift;
    q.coeffs_ = std::move(quot);
    q.trim();
    return q;
}

LaurentPoly LaurentPoly::gcd(const LaurentPoly& a, const LaurentPoly& b) {
    auto to_monic_poly = [](const LaurentPoly& p) {
        LaurentPoly r = p;
        if (r.is_zero()) return r;
        r.lead_ = 0;
        Rational lc = r.coeffs_.back();
        for (Rational& c : r.coeffs_) c /= lc;
        return r;
    };
    LaurentPoly u = to_monic_poly(a);
    LaurentPoly v = to_monic_poly(b);
    while (!v.is_zero()) {
        // u mod v, both x^0-based with monic v
        int du = static_cast<int>(u.coeffs_.size()) - 1;
        int dv = static_cast<int>(v.coeffs_.size()) - 1;
        if (u.is_zero() || du < dv) {
            std::swap(u, v);
            continue;
        }
        std::vector<Rational> rem = u.coeffs_;
        for (int k = du - dv; k >= 0; --k) {
            Rational c = rem[static_cast<std::size_t>(k + dv)];
            if (c == 0) continue;
            for (int j = 0; j <= dv; ++j)
                rem[static_cast<std::size_t>(k + j)] -= c * v.coeffs_[static_cast<std::size_t>(j)];
        }
        LaurentPoly r;
        r.coeffs_ = std::move(rem);
        r.trim();
        u = v;
        v = to_monic_poly(r);
    }
    return u;
}

Rational LaurentPoly::signed_content() const {
    if (is_zero()) throw std::logic_error("laurent: content of zero");
    Integer num_gcd = 0;
    Integer den_lcm = 1;
    for (const Rational& c : coeffs_) {
        if (c == 0) continue;
        num_gcd = ::gcd(num_gcd, Integer(abs(c.get_num())));
        den_lcm = ::lcm(den_lcm, Integer(c.get_den()));
    }
    Rational content(num_gcd, den_lcm);
    content.canonicalize();
    if (coeffs_.back() < 0) content = -content;
    return content;
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = static_cast<int>(coeffs_.size()) - 1; i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational a = abs(c);
        bool neg = c < 0;
        if (out.empty()) {
            if (neg) out += '-';
        } else {
            out += neg ? '-' : '+';
        }
        int exp = lead_ + i;
        bool unit = (a == 1);
        if (exp == 0) {
            out += to_string(a);
        } else {
            if (!unit) {
                out += to_string(a);
                out += '*';
            }
            out += 'x';
            if (exp != 1) {
                out += '^';
                out += std::to_string(exp);
            }
        }
    }
    return out;
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t i = 0;
    void skip_ws() {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    }
    bool done() {
        skip_ws();
        return i >= s.size();
    }
    char peek() {
        skip_ws();
        return i < s.size() ? s[i] : '\0';
    }
};

Integer parse_integer(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.i;
    if (c.i < c.s.size() && (c.s[c.i] == '-' || c.s[c.i] == '+')) ++c.i;
    std::size_t digits = c.i;
    while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
    if (c.i == digits) throw std::invalid_argument("laurent: expected integer");
    return Integer(c.s.substr(start, c.i - start));
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
    Cursor c{text};
    LaurentPoly out;
    bool any = false;
    while (!c.done()) {
        int sign = 1;
        char p = c.peek();
        if (p == '+' || p == '-') {
            sign = (p == '-') ? -1 : 1;
            ++c.i;
        } else if (any) {
            throw std::invalid_argument("laurent: expected '+' or '-' between terms");
        }
        Rational coef(1);
        bool have_coef = false;
        if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
            Integer num = parse_integer(c);
            Integer den = 1;
            if (c.peek() == '/') {
                ++c.i;
                den = parse_integer(c);
                if (den == 0) throw std::invalid_argument("laurent: zero denominator in coefficient");
            }
            coef = Rational(num, den);
            coef.canonicalize();
            have_coef = true;
        }
        int exp = 0;
        if (c.peek() == '*') {
            if (!have_coef) throw std::invalid_argument("laurent: stray '*'");
            ++c.i;
            if (c.peek() != 'x') throw std::invalid_argument("laurent: expected 'x' after '*'");
        }
        if (c.peek() == 'x') {
            ++c.i;
            exp = 1;
            if (c.peek() == '^') {
                ++c.i;
                Integer e = parse_integer(c);
                if (!e.fits_sint_p()) throw std::invalid_argument("laurent: exponent out of range");
                exp = static_cast<int>(e.get_si());
            }
        } else if (!have_coef) {
            throw std::invalid_argument("laurent: expected term");
        }
        if (sign < 0) coef = -coef;
        out += LaurentPoly::monomial(coef, exp);
        any = true;
    }
    if (!any) throw std::invalid_argument("laurent: empty input");
    return out;
}

}  // namespace vtx
