#include "vtx/symfunc.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace vtx {

namespace {

std::vector<int> beta_set(const Partition& p) {
    int len = p.length();
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        beta[static_cast<std::size_t>(i)] = p.part(i) + (len - 1 - i);
    return beta;  // strictly decreasing
}

Partition from_beta(std::vector<int> beta) {
    std::sort(beta.begin(), beta.end(), std::greater<int>());
    int len = static_cast<int>(beta.size());
    std::vector<int> parts;
    for (int i = 0; i < len; ++i) {
        int part = beta[static_cast<std::size_t>(i)] - (len - 1 - i);
        if (part > 0) parts.push_back(part);
    }
    return Partition(std::move(parts));
}

Integer mn_character(const Partition& sigma, const Partition& nu);

std::map<std::pair<Partition, Partition>, Integer> char_memo;
std::mutex char_mutex;

Integer mn_character_uncached(const Partition& sigma, const Partition& nu) {
    if (nu.empty()) return 1;
    int t = nu.part(0);
    std::vector<int> rest_parts(nu.parts().begin() + 1, nu.parts().end());
    Partition rest(std::move(rest_parts));
    std::vector<int> beta = beta_set(sigma);
    Integer acc = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i];
        int target = b - t;
        if (target < 0) continue;
        bool occupied = false;
        int between = 0;
        for (std::size_t j = 0; j < beta.size(); ++j) {
            if (j == i) continue;
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < b) ++between;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        Integer sub = mn_character(from_beta(std::move(nb)), rest);
        if (between % 2)
            acc -= sub;
        else
            acc += sub;
    }
    return acc;
}

Integer mn_character(const Partition& sigma, const Partition& nu) {
    std::pair<Partition, Partition> key(sigma, nu);
    {
        std::lock_guard<std::mutex> lk(char_mutex);
        auto it = char_memo.find(key);
        if (it != char_memo.end()) return it->second;
    }
    Integer value = mn_character_uncached(sigma, nu);
    std::lock_guard<std::mutex> lk(char_mutex);
    char_memo.emplace(std::move(key), value);
    return value;
}

}  // namespace

Integer character(const Partition& sigma, const Partition& nu) {
    if (sigma.size() != nu.size())
        throw std::invalid_argument("character: |sigma| != |nu|");
    return mn_character(sigma, nu);
}

namespace {

struct LRState {
    const Partition* outer;
    const Partition* inner;
    const Partition* content;
    std::vector<std::vector<int>> grid;  // full outer shape; 0 = unfilled/inner
    std::vector<int> counts;             // placed entries per value, 1-based
    long long found = 0;
};

// Cells are visited in reverse reading order: rows top to bottom, each row
// right to left, so the ballot condition can be checked incrementally.
void lr_fill(LRState& st, int row, int col) {
    const Partition& outer = *st.outer;
    const Partition& inner = *st.inner;
    if (row == outer.length()) {
        ++st.found;
        return;
    }
    if (col < inner.part(row)) {
        lr_fill(st, row + 1, outer.part(row + 1) - 1);
        return;
    }
    int lo = 1;
    int hi = static_cast<int>(st.counts.size());
    if (col + 1 < outer.part(row)) hi = std::min(hi, st.grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col + 1)]);
    if (row > 0 && col < outer.part(row - 1) && col >= inner.part(row - 1))
        lo = std::max(lo, st.grid[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] + 1);
    for (int v = lo; v <= hi; ++v) {
        if (st.counts[static_cast<std::size_t>(v - 1)] >= st.content->part(v - 1)) continue;
        if (v >= 2 && st.counts[static_cast<std::size_t>(v - 1)] >= st.counts[static_cast<std::size_t>(v - 2)])
            continue;
        st.grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
        ++st.counts[static_cast<std::size_t>(v - 1)];
        lr_fill(st, row, col - 1);
        --st.counts[static_cast<std::size_t>(v - 1)];
        st.grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = 0;
    }
}

std::map<std::array<Partition, 3>, Integer> lr_memo;
std::mutex lr_mutex;

}  // namespace

Integer lr_coefficient(const Partition& mu, const Partition& eta, const Partition& rho) {
    if (eta.size() + rho.size() != mu.size()) return 0;
    if (!mu.contains(eta)) return 0;
    if (rho.empty()) return 1;  // eta == mu at this point
    if (eta.empty() && rho != mu) {
        // c^mu_{0,rho} = delta_{mu,rho}
        return 0;
    }
    if (eta.empty()) return 1;
    std::array<Partition, 3> key{mu, eta, rho};
    {
        std::lock_guard<std::mutex> lk(lr_mutex);
        auto it = lr_memo.find(key);
        if (it != lr_memo.end()) return it->second;
    }
    LRState st;
    st.outer = &mu;
    st.inner = &eta;
    st.content = &rho;
    st.grid.assign(static_cast<std::size_t>(mu.length()),
                   std::vector<int>(static_cast<std::size_t>(mu.part(0)), 0));
    st.counts.assign(static_cast<std::size_t>(rho.length()), 0);
    lr_fill(st, 0, mu.part(0) - 1);
    Integer value(st.found);
    std::lock_guard<std::mutex> lk(lr_mutex);
    lr_memo.emplace(std::move(key), value);
    return value;
}

namespace {

std::map<Partition, QRat> principal_memo;
std::mutex principal_mutex;

std::map<std::pair<Partition, Partition>, QRat> skew_memo;
std::mutex skew_mutex;

}  // namespace

QRat schur_principal(const Partition& nu) {
    if (nu.empty()) return QRat(1);
    {
        std::lock_guard<std::mutex> lk(principal_mutex);
        auto it = principal_memo.find(nu);
        if (it != principal_memo.end()) return it->second;
    }
    // s_nu(q^{-rho}) = x^{-|nu|} t^{n(nu)} / prod_cells (1 - t^{hook}), t = x^{-2}
    long long shift = -static_cast<long long>(nu.size()) - 2 * nu.n_stat();
    LaurentPoly num = LaurentPoly::monomial(Rational(1), static_cast<int>(shift));
    LaurentPoly den(1);
    for (int h : nu.hook_lengths()) {
        LaurentPoly factor =
            LaurentPoly(1) - LaurentPoly::monomial(Rational(1), -2 * h);
        den *= factor;
    }
    QRat value(num, den);
    std::lock_guard<std::mutex> lk(principal_mutex);
    principal_memo.emplace(nu, value);
    return value;
}

QRat skew_schur_principal(const Partition& mu, const Partition& lambda) {
    if (lambda.empty()) return schur_principal(mu);
    if (!mu.contains(lambda)) return QRat();
    if (lambda == mu) return QRat(1);
    std::pair<Partition, Partition> key(mu, lambda);
    {
        std::lock_guard<std::mutex> lk(skew_mutex);
        auto it = skew_memo.find(key);
        if (it != skew_memo.end()) return it->second;
    }
    QRat acc;
    for (const Partition& nu : partitions_of(mu.size() - lambda.size())) {
        Integer c = lr_coefficient(mu, lambda, nu);
        if (c == 0) continue;
        acc += QRat(Rational(c)) * schur_principal(nu);
    }
    std::lock_guard<std::mutex> lk(skew_mutex);
    skew_memo.emplace(std::move(key), acc);
    return acc;
}

}  // namespace vtx
