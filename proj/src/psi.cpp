#include "vtx/psi.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace vtx {

namespace {

std::map<std::vector<int>, Rational> psi_memo;
std::mutex psi_mutex;

// genus from the dimension constraint, -1 if none
int genus_of(const std::vector<int>& k) {
    long long total = std::accumulate(k.begin(), k.end(), 0LL);
    long long n = static_cast<long long>(k.size());
    long long three_g = total - n + 3;
    if (three_g < 0 || three_g % 3 != 0) return -1;
    return static_cast<int>(three_g / 3);
}

Rational psi_eval(std::vector<int> k);

Rational dvv_step(const std::vector<int>& k, int g) {
    // k sorted descending, k[0] >= 2, no zero entries
    int d1 = k[0];
    std::vector<int> rest(k.begin() + 1, k.end());
    Rational acc(0);
    // joining term
    for (std::size_t j = 0; j < rest.size(); ++j) {
        std::vector<int> next = rest;
        next[j] = d1 + rest[j] - 1;
        Rational coef(double_factorial_odd(d1 + rest[j]),
                      double_factorial_odd(rest[j]) * double_factorial_odd(d1 + 1));
        coef.canonicalize();
        acc += coef * psi_eval(std::move(next));
    }
    // splitting terms: tau_a tau_b with a + b = d1 - 2
    for (int a = 0; a <= d1 - 2; ++a) {
        int b = d1 - 2 - a;
        Rational coef(double_factorial_odd(a + 1) * double_factorial_odd(b + 1),
                      2 * double_factorial_odd(d1 + 1));
        coef.canonicalize();
        // non-separating: genus drops
        {
            std::vector<int> next = rest;
            next.push_back(a);
            next.push_back(b);
            // dimension forces genus g-1; psi_eval checks it
            acc += coef * psi_eval(std::move(next));
        }
        // separating: distribute the remaining insertions
        std::size_t m = rest.size();
        for (std::size_t mask = 0; mask < (1u << m); ++mask) {
            std::vector<int> left{a}, right{b};
            for (std::size_t j = 0; j < m; ++j) {
                if (mask & (1u << j))
                    left.push_back(rest[j]);
                else
                    right.push_back(rest[j]);
            }
            // genus split is forced by the dimension constraint on each side;
            // psi_eval returns 0 for inconsistent splits, so summing the two
            // sides over all masks double counts nothing.
            acc += coef * psi_eval(std::move(left)) * psi_eval(std::move(right));
        }
    }
    (void)g;
    return acc;
}

Rational psi_eval(std::vector<int> k) {
    for (int v : k)
        if (v < 0) return Rational(0);
    int g = genus_of(k);
    if (g < 0) return Rational(0);
    if (k.empty()) return Rational(0);  // unpointed integrals unsupported
    std::sort(k.begin(), k.end(), std::greater<int>());
    {
        std::lock_guard<std::mutex> lk(psi_mutex);
        auto it = psi_memo.find(k);
        if (it != psi_memo.end()) return it->second;
    }
    Rational value(0);
    if (g == 0 && k.size() == 3 && k[0] == 0) {
        value = 1;
    } else if (g == 1 && k.size() == 1 && k[0] == 1) {
        value = Rational(1, 24);
    } else if (k.back() == 0) {
        // string equation: drop one tau_0, lower each remaining index in turn
        std::vector<int> base(k.begin(), k.end() - 1);
        for (std::size_t j = 0; j < base.size() && base[j] > 0; ++j) {
            std::vector<int> next = base;
            next[j] -= 1;
            value += psi_eval(std::move(next));
        }
    } else if (k[0] == 1) {
        // all entries are 1: dilaton on the last one
        std::vector<int> next(k.begin(), k.end() - 1);
        int n_rest = static_cast<int>(next.size());
        value = Rational(2 * g - 2 + n_rest) * psi_eval(std::move(next));
    } else {
        value = dvv_step(k, g);
    }
    std::lock_guard<std::mutex> lk(psi_mutex);
    psi_memo.emplace(std::move(k), value);
    return value;
}

}  // namespace

Rational psi_integral(const std::vector<int>& k) {
    if (k.empty()) throw std::invalid_argument("psi_integral: need at least one insertion");
    for (int v : k)
        if (v < 0) throw std::invalid_argument("psi_integral: negative exponent");
    return psi_eval(k);
}

}  // namespace vtx
