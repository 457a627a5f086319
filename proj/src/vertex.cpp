#include "vtx/vertex.hpp"

#include <cstdint>
#include <mutex>
#include <stdexcept>

#include "vtx/symfunc.hpp"

namespace vtx {

namespace {

std::map<std::pair<Partition, Partition>, QRat> w_two_memo;
std::mutex w_two_mutex;

std::map<PartitionTriple, QRat> w_vertex_memo;
std::mutex w_vertex_mutex;

QRat x_power(long long k) {
    if (k < INT32_MIN || k > INT32_MAX) throw std::overflow_error("x_power: exponent overflow");
    return QRat::monomial(Rational(1), static_cast<int>(k));
}

}  // namespace

QRat w_two(const Partition& mu, const Partition& nu) {
    std::pair<Partition, Partition> key(mu, nu);
    {
        std::lock_guard<std::mutex> lk(w_two_mutex);
        auto it = w_two_memo.find(key);
        if (it != w_two_memo.end()) return it->second;
    }
    Partition mut = mu.conjugate();
    Partition nut = nu.conjugate();
    QRat acc;
    // lambda runs over diagrams inside both mu^t and nu^t
    const Partition& smaller = mut.size() <= nut.size() ? mut : nut;
    for (const Partition& lambda : subdiagrams(smaller)) {
        if (!mut.contains(lambda) || !nut.contains(lambda)) continue;
        QRat a = skew_schur_principal(mut, lambda);
        if (a.is_zero()) continue;
        QRat b = skew_schur_principal(nut, lambda);
        if (b.is_zero()) continue;
        acc += a * b;
    }
    QRat value = x_power(mu.kappa() + nu.kappa()) * acc;
    std::lock_guard<std::mutex> lk(w_two_mutex);
    w_two_memo.emplace(std::move(key), value);
    return value;
}

QRat w_one(const Partition& mu) { return w_two(mu, Partition{}); }

QRat w_vertex(const PartitionTriple& mu) {
    {
        std::lock_guard<std::mutex> lk(w_vertex_mutex);
        auto it = w_vertex_memo.find(mu);
        if (it != w_vertex_memo.end()) return it->second;
    }
    const Partition& mu1 = mu[0];
    const Partition& mu2 = mu[1];
    const Partition& mu3 = mu[2];
    Partition mu2t = mu2.conjugate();
    Partition mu3t = mu3.conjugate();
    QRat acc;
    int eta_max = std::min(mu1.size(), mu3.size());
    for (int k = 0; k <= eta_max; ++k) {
        for (const Partition& eta : partitions_of(k)) {
            for (const Partition& rho1 : partitions_of(mu1.size() - k)) {
                Integer c1 = lr_coefficient(mu1, eta, rho1);
                if (c1 == 0) continue;
                for (const Partition& rho3 : partitions_of(mu3.size() - k)) {
                    Integer c3 = lr_coefficient(mu3t, eta, rho3.conjugate());
                    if (c3 == 0) continue;
                    QRat term = w_two(mu2t, rho1) * w_two(mu2, rho3.conjugate());
                    acc += QRat(Rational(c1 * c3)) * term;
                }
            }
        }
    }
    QRat value = x_power(mu2.kappa() + mu3.kappa()) * acc / w_one(mu2);
    std::lock_guard<std::mutex> lk(w_vertex_mutex);
    w_vertex_memo.emplace(mu, value);
    return value;
}

QRat w_tilde_vertex(const PartitionTriple& rho) {
    const Partition& rho1 = rho[0];
    const Partition& rho2 = rho[1];
    const Partition& rho3 = rho[2];
    QRat acc;
    int m_max = std::min(rho1.size(), rho3.size() / 2);
    for (int m = 0; m <= m_max; ++m) {
        // character sum over mu |- m with eta1 |- m, eta3 |- 2m
        for (const Partition& eta1 : partitions_of(m)) {
            Partition eta1t = eta1.conjugate();
            for (const Partition& nu1 : partitions_of(rho1.size() - m)) {
                Integer c_rho1 = lr_coefficient(rho1, eta1t, nu1);
                if (c_rho1 == 0) continue;
                Partition nu1t = nu1.conjugate();
                for (const Partition& eta3 : partitions_of(2 * m)) {
                    for (const Partition& nu3 : partitions_of(rho3.size() - 2 * m)) {
                        Integer c_rho3 = lr_coefficient(rho3, eta3, nu3);
                        if (c_rho3 == 0) continue;
                        // mu-sum decouples: collect it once per (eta1, eta3)
                        Rational char_sum(0);
                        for (const Partition& mu : partitions_of(m)) {
                            Integer chi1 = character(eta1, mu);
                            if (chi1 == 0) continue;
                            Integer chi3 = character(eta3, mu.doubled());
                            if (chi3 == 0) continue;
                            Rational w(chi1 * chi3);
                            w /= mu.z_factor();
                            char_sum += w;
                        }
                        if (char_sum == 0) continue;
                        for (const Partition& nu_plus :
                             partitions_of(nu1.size() + rho2.size())) {
                            Integer c_plus = lr_coefficient(nu_plus, nu1t, rho2);
                            if (c_plus == 0) continue;
                            QRat inner = x_power(-2 * nu_plus.kappa() - nu3.kappa() / 2) *
                                         w_two(nu_plus, nu3);
                            Rational coef = Rational(c_plus * c_rho1 * c_rho3) * char_sum;
                            acc += QRat(coef) * inner;
                        }
                    }
                }
            }
        }
    }
    QRat prefactor =
        x_power(-rho1.kappa() + 2 * rho2.kappa() + rho3.kappa() / 2);
    return prefactor * acc;
}

QRat apply_framing(const QRat& amplitude, const PartitionTriple& mu,
                   const std::array<long long, 3>& framing) {
    long long e = 0;
    for (int i = 0; i < 3; ++i) e += mu[static_cast<std::size_t>(i)].kappa() * framing[static_cast<std::size_t>(i)];
    return amplitude * x_power(e);
}

QRat rep_to_winding(const AmplitudeTable& rep_table, const PartitionTriple& mu) {
    QRat acc;
    for (const Partition& nu1 : partitions_of(mu[0].size())) {
        for (const Partition& nu2 : partitions_of(mu[1].size())) {
            for (const Partition& nu3 : partitions_of(mu[2].size())) {
                PartitionTriple nu{nu1, nu2, nu3};
                auto it = rep_table.find(nu);
                if (it == rep_table.end())
                    throw std::invalid_argument("rep_to_winding: missing table entry " +
                                                triple_str(nu));
                Rational w(1);
                for (int i = 0; i < 3; ++i) {
                    auto ui = static_cast<std::size_t>(i);
                    w *= Rational(character(nu[ui], mu[ui]));
                    w /= mu[ui].z_factor();
                }
                if (w == 0) continue;
                acc += it->second * QRat(w);
            }
        }
    }
    return acc;
}

}  // namespace vtx
