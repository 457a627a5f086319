#include "vtx/selfcheck.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace vtx {

namespace {

// Semistandard fillings of a (possibly skew) shape with entries in 1..nvars.
// visit() receives the full grid each time; cells outside the skew shape
// hold 0.
void enumerate_ssyt(const Partition& outer, const Partition& inner, int nvars,
                    std::vector<std::vector<int>>& grid, int row, int col,
                    const std::function<bool(int row, int col, int value)>& admissible,
                    const std::function<void()>& visit) {
    if (row == outer.length()) {
        visit();
        return;
    }
    if (col >= outer.part(row)) {
        enumerate_ssyt(outer, inner, nvars, grid, row + 1, inner.part(row + 1),
                       admissible, visit);
        return;
    }
    int lo = 1;
    if (col > inner.part(row) && col > 0) lo = std::max(lo, grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - 1)]);
    if (row > 0 && col < outer.part(row - 1) && col >= inner.part(row - 1))
        lo = std::max(lo, grid[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] + 1);
    for (int v = lo; v <= nvars; ++v) {
        if (!admissible(row, col, v)) continue;
        grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
        enumerate_ssyt(outer, inner, nvars, grid, row, col + 1, admissible, visit);
        grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = 0;
    }
}

}  // namespace

std::map<std::vector<int>, Integer> schur_monomials(const Partition& nu, int nvars) {
    std::map<std::vector<int>, Integer> out;
    if (nu.empty()) {
        out[std::vector<int>(static_cast<std::size_t>(nvars), 0)] = 1;
        return out;
    }
    if (nu.length() > nvars) return out;  // zero polynomial
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(nu.length()),
                                       std::vector<int>(static_cast<std::size_t>(nu.part(0)), 0));
    Partition inner;  // straight shape
    auto admissible = [](int, int, int) { return true; };
    auto visit = [&]() {
        std::vector<int> exps(static_cast<std::size_t>(nvars), 0);
        for (int r = 0; r < nu.length(); ++r)
            for (int c = 0; c < nu.part(r); ++c)
                ++exps[static_cast<std::size_t>(grid[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] - 1)];
        out[exps] += 1;
    };
    enumerate_ssyt(nu, inner, nvars, grid, 0, 0, admissible, visit);
    return out;
}

std::map<Partition, Integer> lr_bruteforce(const Partition& eta, const Partition& rho,
                                           int nvars) {
    if (eta.length() > nvars || rho.length() > nvars)
        throw std::invalid_argument("lr_bruteforce: too few variables");
    std::map<std::vector<int>, Integer> a = schur_monomials(eta, nvars);
    std::map<std::vector<int>, Integer> b = schur_monomials(rho, nvars);
    std::map<std::vector<int>, Integer> product;
    for (const auto& [ka, va] : a) {
        for (const auto& [kb, vb] : b) {
            std::vector<int> k(ka.size());
            for (std::size_t i = 0; i < k.size(); ++i) k[i] = ka[i] + kb[i];
            product[k] += va * vb;
        }
    }
    for (auto it = product.begin(); it != product.end();) {
        if (it->second == 0) it = product.erase(it);
        else ++it;
    }
    std::map<Partition, Integer> out;
    while (!product.empty()) {
        // lex-greatest surviving monomial must be a dominant weight
        auto top = std::prev(product.end());
        std::vector<int> lead = top->first;
        Integer coef = top->second;
        std::vector<int> parts;
        for (std::size_t i = 0; i < lead.size(); ++i) {
            if (i > 0 && lead[i] > lead[i - 1])
                throw std::logic_error("lr_bruteforce: leading monomial not dominant");
            if (lead[i] > 0) parts.push_back(lead[i]);
        }
        Partition mu(parts);
        out[mu] = coef;
        for (const auto& [k, v] : schur_monomials(mu, nvars)) {
            auto it = product.find(k);
            Integer next = (it == product.end() ? Integer(0) : it->second) - coef * v;
            if (next == 0) {
                if (it != product.end()) product.erase(it);
            } else {
                product[k] = next;
            }
        }
    }
    return out;
}

std::vector<Integer> skew_principal_series_oracle(const Partition& mu, const Partition& lambda,
                                                  int nvars, int order) {
    std::vector<Integer> coeffs(static_cast<std::size_t>(order) + 1);
    if (!mu.contains(lambda)) return coeffs;  // zero
    if (mu == lambda) {
        coeffs[0] = 1;
        return coeffs;
    }
    std::vector<std::vector<int>> grid(static_cast<std::size_t>(mu.length()),
                                       std::vector<int>(static_cast<std::size_t>(mu.part(0)), 0));
    long long weight = 0;  // running exponent of y
    auto admissible = [&](int, int, int v) { return weight + 2 * v - 1 <= order; };
    // track the weight through the recursion by wrapping grid writes
    std::function<void(int, int)> fill = [&](int row, int col) {
        if (row == mu.length()) {
            coeffs[static_cast<std::size_t>(weight)] += 1;
            return;
        }
        if (col >= mu.part(row)) {
            fill(row + 1, lambda.part(row + 1));
            return;
        }
        int lo = 1;
        if (col > lambda.part(row) && col > 0)
            lo = std::max(lo, grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col - 1)]);
        if (row > 0 && col < mu.part(row - 1) && col >= lambda.part(row - 1))
            lo = std::max(lo, grid[static_cast<std::size_t>(row - 1)][static_cast<std::size_t>(col)] + 1);
        for (int v = lo; v <= nvars; ++v) {
            long long w = 2LL * v - 1;
            if (weight + w > order) break;  // larger v only grows the weight
            grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = v;
            weight += w;
            fill(row, col + 1);
            weight -= w;
            grid[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)] = 0;
        }
    };
    fill(0, lambda.part(0));
    (void)admissible;
    return coeffs;
}

std::map<int, Rational> series_in_x_inverse(const QRat& f, int order) {
    std::map<int, Rational> out;
    if (f.is_zero()) return out;
    QRat g = f.flip();  // now expand at x = 0 (x here plays the role of y)
    const LaurentPoly& num = g.num();
    const LaurentPoly& den = g.den();
    if (den.coeff(0) == 0)
        throw std::domain_error("series_in_x_inverse: pole at the expansion point");
    int lead = num.min_exp();
    // long division: c_k determined by num_k = sum_j den_j c_{k-j}
    Rational d0 = den.coeff(0);
    std::map<int, Rational> c;
    for (int k = lead; k <= order; ++k) {
        Rational acc = num.coeff(k);
        for (int j = 1; j <= den.max_exp() && k - j >= lead; ++j) {
            auto it = c.find(k - j);
            if (it != c.end()) acc -= den.coeff(j) * it->second;
        }
        c[k] = acc / d0;
    }
    for (const auto& [k, v] : c)
        if (v != 0) out[k] = v;
    return out;
}

namespace {

// Number of ways to distribute the cycles of type nu over the rows of
// lambda so that row i collects total lambda_i.
Integer permutation_character(const Partition& lambda, const Partition& nu) {
    std::vector<int> remaining(lambda.parts().begin(), lambda.parts().end());
    std::function<Integer(std::size_t)> place = [&](std::size_t cycle) -> Integer {
        if (cycle == static_cast<std::size_t>(nu.length())) return 1;
        Integer acc = 0;
        int len = nu.part(static_cast<int>(cycle));
        for (std::size_t r = 0; r < remaining.size(); ++r) {
            if (remaining[r] < len) continue;
            remaining[r] -= len;
            acc += place(cycle + 1);
            remaining[r] += len;
        }
        return acc;
    };
    return place(0);
}

}  // namespace

std::map<std::pair<Partition, Partition>, Integer> character_table_bruteforce(int d) {
    std::vector<Partition> classes = partitions_of(d);
    // partitions_of is reverse-lex: dominance-compatible, (d) first
    std::map<std::pair<Partition, Partition>, Integer> table;
    std::vector<Partition> done;
    for (const Partition& lambda : classes) {
        std::map<Partition, Rational> row;
        for (const Partition& nu : classes)
            row[nu] = Rational(permutation_character(lambda, nu));
        for (const Partition& mu : done) {
            // overlap = <psi_lambda, chi_mu> in the class inner product
            Rational overlap(0);
            for (const Partition& nu : classes) {
                Rational term = row[nu] * Rational(table[{mu, nu}]);
                term /= nu.z_factor();
                overlap += term;
            }
            if (overlap == 0) continue;
            for (const Partition& nu : classes)
                row[nu] -= overlap * Rational(table[{mu, nu}]);
        }
        for (const Partition& nu : classes) {
            if (row[nu].get_den() != 1)
                throw std::logic_error("character_table_bruteforce: non-integer character");
            table[{lambda, nu}] = row[nu].get_num();
        }
        done.push_back(lambda);
    }
    return table;
}

}  // namespace vtx
