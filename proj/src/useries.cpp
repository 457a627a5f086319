#include "vtx/useries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vtx {

USeries USeries::zero(int order) {
    USeries s;
    s.order_ = order;
    return s;
}

USeries USeries::constant(const Rational& c, int order) { return monomial(c, 0, order); }

USeries USeries::monomial(const Rational& c, int k, int order) {
    USeries s;
    s.order_ = order;
    if (c != 0 && k <= order) {
        s.lead_ = k;
        s.coeffs_.push_back(c);
    }
    return s;
}

USeries USeries::exp_linear(const Rational& a, int order) {
    USeries s;
    s.order_ = order;
    if (order < 0) return s;
    s.lead_ = 0;
    s.coeffs_.resize(static_cast<std::size_t>(order) + 1);
    Rational term(1);
    s.coeffs_[0] = term;
    for (int k = 1; k <= order; ++k) {
        term *= a;
        term /= k;
        s.coeffs_[static_cast<std::size_t>(k)] = term;
    }
    s.trim_front();
    return s;
}

bool USeries::is_zero() const {
    for (const Rational& c : coeffs_)
        if (c != 0) return false;
    return true;
}

Rational USeries::coeff(int k) const {
    if (k > order_)
        throw std::out_of_range("useries: coefficient beyond valid truncation order");
    int i = k - lead_;
    if (coeffs_.empty() || i < 0 || i >= static_cast<int>(coeffs_.size())) return Rational(0);
    return coeffs_[static_cast<std::size_t>(i)];
}

void USeries::trim_front() {
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

int USeries::effective_lead() const { return coeffs_.empty() ? order_ + 1 : lead_; }

USeries USeries::operator-() const {
    USeries s = *this;
    for (Rational& c : s.coeffs_) c = -c;
    return s;
}

USeries operator+(const USeries& a, const USeries& b) {
    USeries s;
    s.order_ = std::min(a.order_, b.order_);
    int lo = std::min(a.effective_lead(), b.effective_lead());
    if (lo > s.order_) return s;
    s.lead_ = lo;
    s.coeffs_.assign(static_cast<std::size_t>(s.order_ - lo + 1), Rational(0));
    for (int k = lo; k <= s.order_; ++k) {
        Rational v(0);
        if (k >= a.effective_lead() && k <= a.order_) v += a.coeff(k);
        if (k >= b.effective_lead() && k <= b.order_) v += b.coeff(k);
        s.coeffs_[static_cast<std::size_t>(k - lo)] = v;
    }
    s.trim_front();
    return s;
}

USeries operator-(const USeries& a, const USeries& b) { return a + (-b); }

USeries operator*(const USeries& a, const USeries& b) {
    USeries s;
    s.order_ = std::min(a.order_ + b.effective_lead(), b.order_ + a.effective_lead());
    if (a.coeffs_.empty() || b.coeffs_.empty()) return s;
    int lo = a.lead_ + b.lead_;
    if (lo > s.order_) return s;
    s.lead_ = lo;
    s.coeffs_.assign(static_cast<std::size_t>(s.order_ - lo + 1), Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            int k = a.lead_ + static_cast<int>(i) + b.lead_ + static_cast<int>(j);
            if (k > s.order_) break;
            s.coeffs_[static_cast<std::size_t>(k - lo)] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    s.trim_front();
    return s;
}

USeries USeries::scaled(const Rational& c) const {
    USeries s = *this;
    if (c == 0) {
        s.coeffs_.clear();
        s.lead_ = 0;
        return s;
    }
    for (Rational& v : s.coeffs_) v *= c;
    return s;
}

USeries USeries::substituted_scaled(long long n) const {
    USeries s;
    s.order_ = order_;
    if (n == 0) {
        if (effective_lead() < 0 && !is_zero())
            throw std::domain_error("useries: substituting 0 into a series with a pole");
        if (order_ >= 0 && effective_lead() <= 0 && !coeffs_.empty()) {
            Rational c0 = coeff(0);
            return constant(c0, order_);
        }
        return s;
    }
    s.lead_ = lead_;
    s.coeffs_ = coeffs_;
    Rational nn(static_cast<long>(n));
    for (std::size_t i = 0; i < s.coeffs_.size(); ++i) {
        int k = lead_ + static_cast<int>(i);
        if (k == 0) continue;
        Rational factor(1);
        if (k > 0) {
            for (int t = 0; t < k; ++t) factor *= nn;
        } else {
            for (int t = 0; t < -k; ++t) factor /= nn;
        }
        s.coeffs_[i] *= factor;
    }
    s.trim_front();
    return s;
}

USeries USeries::inverse() const {
    if (coeffs_.empty() || coeffs_.front() == 0)
        throw std::domain_error("useries: inverse needs a known nonzero lowest coefficient");
    int v = lead_;
    int unit_order = order_ - v;  // known terms of the unit part, exponents 0..unit_order
    if (unit_order < 0) throw std::domain_error("useries: truncation too short to invert");
    std::vector<Rational> unit(static_cast<std::size_t>(unit_order) + 1, Rational(0));
    for (int k = 0; k <= unit_order && k < static_cast<int>(coeffs_.size()); ++k)
        unit[static_cast<std::size_t>(k)] = coeffs_[static_cast<std::size_t>(k)];
    std::vector<Rational> inv(unit.size(), Rational(0));
    inv[0] = 1 / unit[0];
    for (int k = 1; k <= unit_order; ++k) {
        Rational acc(0);
        for (int j = 1; j <= k; ++j)
            acc += unit[static_cast<std::size_t>(j)] * inv[static_cast<std::size_t>(k - j)];
        inv[static_cast<std::size_t>(k)] = -acc / unit[0];
    }
    USeries s;
    s.order_ = order_ - 2 * v;
    s.lead_ = -v;
    int keep = std::min<int>(static_cast<int>(inv.size()), s.order_ - s.lead_ + 1);
    if (keep > 0)
        s.coeffs_.assign(inv.begin(), inv.begin() + keep);
    s.trim_front();
    return s;
}

bool USeries::equal_through(const USeries& o, int through) const {
    if (through > order_ || through > o.order_)
        throw std::out_of_range("useries: comparison beyond valid truncation order");
    int lo = std::min(effective_lead(), o.effective_lead());
    for (int k = lo; k <= through; ++k)
        if (coeff(k) != o.coeff(k)) return false;
    return true;
}

std::string USeries::str(const std::string& var) const {
    std::ostringstream os;
    bool any = false;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        int k = lead_ + static_cast<int>(i);
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        if (any) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Rational a = abs(c);
        any = true;
        if (k == 0) {
            os << to_string(a);
        } else {
            if (a != 1) os << to_string(a) << "*";
            os << var;
            if (k != 1) os << "^" << k;
        }
    }
    if (!any) os << "0";
    os << " + O(" << var << "^" << order_ + 1 << ")";
    return os.str();
}

namespace {

// Multiplicity of the root x = 1.
int root_one_multiplicity(const LaurentPoly& p) {
    if (p.is_zero()) return 0;
    LaurentPoly cur = p.shifted(-p.min_exp());
    LaurentPoly x_minus_1 = LaurentPoly::monomial(Rational(1), 1) + LaurentPoly(Rational(-1));
    int m = 0;
    for (;;) {
        // Divisible by x-1 iff the coefficient sum vanishes.
        Rational sum(0);
        for (int e = cur.min_exp(); e <= cur.max_exp(); ++e) sum += cur.coeff(e);
        if (sum != 0) break;
        cur = LaurentPoly::div_exact(cur, x_minus_1);
        ++m;
    }
    return m;
}

USeries poly_at_exp_half(const LaurentPoly& p, int order) {
    USeries acc = USeries::zero(order);
    if (p.is_zero()) return acc;
    for (int e = p.min_exp(); e <= p.max_exp(); ++e) {
        Rational c = p.coeff(e);
        if (c == 0) continue;
        Rational half_e(e, 2);
        half_e.canonicalize();
        acc += USeries::exp_linear(half_e, order).scaled(c);
    }
    return acc;
}

}  // namespace

USeries expand_q_exp(const QRat& f, int order) {
    if (f.is_zero()) return USeries::zero(order);
    int m = root_one_multiplicity(f.den());
    int margin = order + 2 * m;
    USeries num = poly_at_exp_half(f.num(), margin);
    USeries den = poly_at_exp_half(f.den(), margin);
    USeries res = num * den.inverse();
    if (res.order() < order)
        throw std::logic_error("useries: internal truncation shortfall in expand_q_exp");
    // Clamp to the requested order for a canonical result.
    USeries out = USeries::zero(order) + res;
    return out;
}

}  // namespace vtx
