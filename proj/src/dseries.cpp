#include "vtx/dseries.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace vtx {

namespace {

int key_degree(const std::vector<int>& key) {
    return std::accumulate(key.begin(), key.end(), 0);
}

}  // namespace

DegreeSeries::DegreeSeries(std::vector<std::string> vars, int cutoff)
    : vars_(std::move(vars)), cutoff_(cutoff) {
    if (cutoff < 0) throw std::invalid_argument("dseries: negative cutoff");
}

DegreeSeries DegreeSeries::one(std::vector<std::string> vars, int cutoff) {
    DegreeSeries s(std::move(vars), cutoff);
    s.add_term(std::vector<int>(s.vars_.size(), 0), QRat(1));
    return s;
}

QRat DegreeSeries::coeff(const std::vector<int>& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? QRat() : it->second;
}

void DegreeSeries::add_term(const std::vector<int>& key, const QRat& value) {
    if (key.size() != vars_.size()) throw std::invalid_argument("dseries: key arity mismatch");
    for (int e : key)
        if (e < 0) throw std::invalid_argument("dseries: negative exponent");
    if (key_degree(key) > cutoff_) return;
    if (value.is_zero()) return;
    auto [it, inserted] = terms_.emplace(key, value);
    if (!inserted) {
        it->second += value;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

QRat DegreeSeries::constant_term() const {
    return coeff(std::vector<int>(vars_.size(), 0));
}

bool DegreeSeries::is_one() const {
    return terms_.size() == 1 && constant_term().is_one();
}

void DegreeSeries::check_aligned(const DegreeSeries& a, const DegreeSeries& b) {
    if (a.vars_ != b.vars_) throw std::invalid_argument("dseries: variable lists differ");
}

DegreeSeries DegreeSeries::operator-() const {
    DegreeSeries s = *this;
    for (auto& [k, v] : s.terms_) v = -v;
    return s;
}

DegreeSeries operator+(const DegreeSeries& a, const DegreeSeries& b) {
    DegreeSeries::check_aligned(a, b);
    DegreeSeries s(a.vars_, std::min(a.cutoff_, b.cutoff_));
    for (const auto& [k, v] : a.terms_) s.add_term(k, v);
    for (const auto& [k, v] : b.terms_) s.add_term(k, v);
    return s;
}

DegreeSeries operator-(const DegreeSeries& a, const DegreeSeries& b) { return a + (-b); }

DegreeSeries operator*(const DegreeSeries& a, const DegreeSeries& b) {
    DegreeSeries::check_aligned(a, b);
    DegreeSeries s(a.vars_, std::min(a.cutoff_, b.cutoff_));
    for (const auto& [ka, va] : a.terms_) {
        int da = key_degree(ka);
        for (const auto& [kb, vb] : b.terms_) {
            if (da + key_degree(kb) > s.cutoff_) continue;
            std::vector<int> k(ka.size());
            for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
            s.add_term(k, va * vb);
        }
    }
    return s;
}

DegreeSeries DegreeSeries::log() const {
    if (!constant_term().is_one())
        throw std::domain_error("dseries: log needs constant term 1");
    DegreeSeries t = *this;
    t.terms_.erase(std::vector<int>(vars_.size(), 0));  // t = Z - 1, valuation >= 1
    DegreeSeries acc(vars_, cutoff_);
    DegreeSeries power = t;
    Rational sign(1);
    for (int k = 1; k <= cutoff_; ++k) {
        QRat factor(Rational(sign / k));
        for (const auto& [key, v] : power.terms_) acc.add_term(key, v * factor);
        if (k < cutoff_) power = power * t;
        sign = -sign;
    }
    return acc;
}

DegreeSeries DegreeSeries::exp() const {
    if (!constant_term().is_zero())
        throw std::domain_error("dseries: exp needs constant term 0");
    DegreeSeries acc = DegreeSeries::one(vars_, cutoff_);
    DegreeSeries power = *this;
    Rational inv_fact(1);
    for (int k = 1; k <= cutoff_; ++k) {
        inv_fact /= k;
        QRat factor{inv_fact};
        for (const auto& [key, v] : power.terms_) acc.add_term(key, v * factor);
        if (k < cutoff_) power = power * *this;
    }
    return acc;
}

DegreeSeries DegreeSeries::collapsed(const std::string& var) const {
    DegreeSeries s({var}, cutoff_);
    for (const auto& [k, v] : terms_) s.add_term({key_degree(k)}, v);
    return s;
}

std::string DegreeSeries::str() const {
    std::ostringstream os;
    bool any = false;
    for (const auto& [k, v] : terms_) {
        if (any) os << " + ";
        any = true;
        os << "(" << v.str() << ")";
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (k[i] == 0) continue;
            os << "*" << vars_[i];
            if (k[i] != 1) os << "^" << k[i];
        }
    }
    if (!any) os << "0";
    return os.str();
}

}  // namespace vtx
