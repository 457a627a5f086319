#include "vtx/hurwitz.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "vtx/symfunc.hpp"

namespace vtx {

USeries phi(const Partition& nu, const Partition& mu, int order) {
    if (nu.size() != mu.size() || nu.size() < 1)
        throw std::invalid_argument("phi: profiles must have equal positive size");
    USeries acc = USeries::zero(order);
    Rational znzm = Rational(nu.z_factor()) * Rational(mu.z_factor());
    for (const Partition& sigma : partitions_of(nu.size())) {
        Integer a = character(sigma, nu);
        if (a == 0) continue;
        Integer b = character(sigma, mu);
        if (b == 0) continue;
        Rational weight = Rational(a * b) / znzm;
        Rational half_kappa(sigma.kappa(), 2);
        half_kappa.canonicalize();
        acc += USeries::exp_linear(half_kappa, order).scaled(weight);
    }
    return acc;
}

namespace {

std::vector<int> cycle_type_of(const std::vector<int>& perm) {
    int d = static_cast<int>(perm.size());
    std::vector<bool> seen(static_cast<std::size_t>(d), false);
    std::vector<int> cycles;
    for (int i = 0; i < d; ++i) {
        if (seen[static_cast<std::size_t>(i)]) continue;
        int len = 0;
        int j = i;
        while (!seen[static_cast<std::size_t>(j)]) {
            seen[static_cast<std::size_t>(j)] = true;
            j = perm[static_cast<std::size_t>(j)];
            ++len;
        }
        cycles.push_back(len);
    }
    std::sort(cycles.begin(), cycles.end(), std::greater<int>());
    return cycles;
}

void count_tuples(const std::vector<int>& current, int remaining,
                  const std::vector<std::pair<int, int>>& transpositions,
                  const std::vector<int>& target, long long& hits) {
    if (remaining == 0) {
        // sigma' = current^{-1}; same cycle type as current
        if (cycle_type_of(current) == target) ++hits;
        return;
    }
    for (const auto& [a, b] : transpositions) {
        std::vector<int> next = current;
        std::swap(next[static_cast<std::size_t>(a)], next[static_cast<std::size_t>(b)]);
        count_tuples(next, remaining - 1, transpositions, target, hits);
    }
}

}  // namespace

Rational hurwitz_bruteforce(const Partition& nu, const Partition& mu, int r) {
    if (nu.size() != mu.size()) throw std::invalid_argument("hurwitz: |nu| != |mu|");
    int d = nu.size();
    if (d < 1 || d > 6) throw std::invalid_argument("hurwitz: brute force limited to 1 <= d <= 6");
    if (r < 0) throw std::invalid_argument("hurwitz: negative branch count");
    std::vector<int> base(static_cast<std::size_t>(d));
    std::iota(base.begin(), base.end(), 0);
    std::vector<std::pair<int, int>> transpositions;
    for (int a = 0; a < d; ++a)
        for (int b = a + 1; b < d; ++b) transpositions.emplace_back(a, b);
    long long hits = 0;
    std::vector<int> perm = base;
    std::vector<int> nu_type = nu.parts();
    std::vector<int> mu_type = mu.parts();
    long long total = 0;
    do {
        if (cycle_type_of(perm) != nu_type) continue;
        // right-multiplying by transpositions, then invert and classify
        count_tuples(perm, r, transpositions, mu_type, hits);
        ++total;
    } while (std::next_permutation(perm.begin(), perm.end()));
    (void)total;
    Rational result(hits);
    result /= factorial(d);
    return result;
}

USeries framing_transform_winding(const WindingSeriesTable& zero_framing,
                                  const std::array<long long, 3>& framing,
                                  const PartitionTriple& mu, int order) {
    USeries acc = USeries::zero(order);
    for (const Partition& nu1 : partitions_of(mu[0].size())) {
        for (const Partition& nu2 : partitions_of(mu[1].size())) {
            for (const Partition& nu3 : partitions_of(mu[2].size())) {
                PartitionTriple nu{nu1, nu2, nu3};
                auto it = zero_framing.find(nu);
                if (it == zero_framing.end())
                    throw std::invalid_argument(
                        "framing_transform_winding: missing table entry " + triple_str(nu));
                USeries term = it->second;
                for (int i = 0; i < 3; ++i) {
                    auto ui = static_cast<std::size_t>(i);
                    if (mu[ui].size() == 0) continue;
                    USeries factor = phi(nu[ui], mu[ui], order).substituted_scaled(framing[ui]);
                    factor = factor.scaled(Rational(nu[ui].z_factor()));
                    term = term * factor;
                }
                acc = acc + term;
            }
        }
    }
    return acc;
}

}  // namespace vtx
