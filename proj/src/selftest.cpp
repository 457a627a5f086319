#include "vtx/selftest.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include "vtx/gluing.hpp"
#include "vtx/hurwitz.hpp"
#include "vtx/invariants.hpp"
#include "vtx/psi.hpp"
#include "vtx/selfcheck.hpp"
#include "vtx/symfunc.hpp"
#include "vtx/useries.hpp"
#include "vtx/vertex.hpp"

namespace vtx {

namespace {

struct Checker {
    long long count = 0;
    bool ok = true;
    std::string detail;
    void expect(bool condition, const std::string& what) {
        ++count;
        if (!condition && ok) {
            ok = false;
            detail = what;
        }
    }
};

CheckResult finish(const std::string& name, const Checker& c,
                   std::chrono::steady_clock::time_point start) {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    return {name, c.ok, c.count, ms, c.detail};
}

std::vector<PartitionTriple> triples_up_to(int max_total) {
    std::vector<PartitionTriple> out;
    for (int total = 0; total <= max_total; ++total)
        for (int a = 0; a <= total; ++a)
            for (int b = 0; a + b <= total; ++b) {
                int c = total - a - b;
                for (const Partition& p1 : partitions_of(a))
                    for (const Partition& p2 : partitions_of(b))
                        for (const Partition& p3 : partitions_of(c))
                            out.push_back({p1, p2, p3});
            }
    return out;
}

QRat conifold_multicover_form(int d) {
    LaurentPoly s = LaurentPoly::monomial(Rational(1), d) -
                    LaurentPoly::monomial(Rational(1), -d);
    QRat form(LaurentPoly(1), s * s * LaurentPoly(static_cast<long long>(d)));
    return -form;
}

}  // namespace

CheckResult check_wtw_identity(int max_total_size) {
    auto start = std::chrono::steady_clock::now();
    Checker c;
    for (const PartitionTriple& t : triples_up_to(max_total_size))
        c.expect(w_tilde_vertex(t) == w_vertex(t), "Wtilde != W at " + triple_str(t));
    return finish("vertex_identity_size" + std::to_string(max_total_size), c, start);
}

CheckResult check_orthogonality(int d_max) {
    auto start = std::chrono::steady_clock::now();
    Checker c;
    for (int d = 1; d <= d_max; ++d) {
        std::vector<Partition> parts = partitions_of(d);
        for (const Partition& sigma : parts) {
            for (const Partition& tau : parts) {
                Rational row(0);
                for (const Partition& nu : parts) {
                    Rational term(character(sigma, nu) * character(tau, nu));
                    term /= nu.z_factor();
                    row += term;
                }
                c.expect(row == (sigma == tau ? 1 : 0),
                         "row orthogonality fails at " + sigma.str() + "," + tau.str());
            }
        }
        for (const Partition& nu : parts) {
            for (const Partition& mu : parts) {
                Integer col(0);
                for (const Partition& sigma : parts)
                    col += character(sigma, nu) * character(sigma, mu);
                Integer want = (nu == mu) ? Integer(nu.z_factor()) : Integer(0);
                c.expect(col == want,
                         "column orthogonality fails at " + nu.str() + "," + mu.str());
            }
        }
    }
    return finish("character_orthogonality_d" + std::to_string(d_max), c, start);
}

CheckResult check_burnside_bruteforce(int d_max, int r_max) {
    auto start = std::chrono::steady_clock::now();
    Checker c;
    for (int d = 1; d <= d_max; ++d) {
        std::vector<Partition> parts = partitions_of(d);
        for (const Partition& nu : parts) {
            for (const Partition& mu : parts) {
                USeries series = phi(nu, mu, r_max);
                for (int r = 0; r <= r_max; ++r) {
                    Rational oracle = hurwitz_bruteforce(nu, mu, r);
                    oracle /= factorial(r);
                    c.expect(series.coeff(r) == oracle,
                             "Burnside coefficient mismatch at " + nu.str() + "," + mu.str() +
                                 " r=" + std::to_string(r));
                }
            }
        }
    }
    return finish("burnside_vs_bruteforce_d" + std::to_string(d_max), c, start);
}

CheckResult check_lr_oracle(int size_max) {
    auto start = std::chrono::steady_clock::now();
    Checker c;
    const int nvars = 8;
    for (int total = 0; total <= size_max; ++total) {
        for (int a = 0; a <= total; ++a) {
            for (const Partition& eta : partitions_of(a)) {
                for (const Partition& rho : partitions_of(total - a)) {
                    std::map<Partition, Integer> oracle = lr_bruteforce(eta, rho, nvars);
                    for (const Partition& mu : partitions_of(total)) {
                        Integer want = 0;
                        auto it = oracle.find(mu);
                        if (it != oracle.end()) want = it->second;
                        c.expect(lr_coefficient(mu, eta, rho) == want,
                                 "LR mismatch c^" + mu.str() + "_{" + eta.str() + "," +
                                     rho.str() + "}");
                    }
                }
            }
        }
    }
    return finish("lr_vs_monomial_expansion_size" + std::to_string(size_max), c, start);
}

CheckResult check_skew_oracle(int size_max, int nvars, int order) {
    auto start = std::chrono::steady_clock::now();
    Checker c;
    for (int total = 1; total <= size_max; ++total) {
        for (const Partition& mu : partitions_of(total)) {
            for (const Partition& lambda : subdiagrams(mu)) {
                std::vector<Integer> oracle =
                    skew_principal_series_oracle(mu, lambda, nvars, order);
                std::map<int, Rational> mine =
                    series_in_x_inverse(skew_schur_principal(mu, lambda), order);
                bool same = true;
                for (int k = 0; k <= order; ++k) {
                    Rational got(0);
                    auto it = mine.find(k);
                    if (it != mine.end()) got = it->second;
                    if (got != Rational(oracle[static_cast<std::size_t>(k)])) same = false;
                }
                for (const auto& [k, v] : mine)
                    if (k < 0 && v != 0) same = false;
                c.expect(same, "skew specialization mismatch at " + mu.str() + "/" +
                                   lambda.str());
            }
        }
    }
    return finish("skew_principal_vs_tableaux_size" + std::to_string(size_max), c, start);
}

CheckResult check_conifold_multicover(int degree_max) {
    auto start = std::chrono::steady_clock::now();
    Checker c;
    FtcyGraph g = FtcyGraph::builtin("conifold");
    DegreeSeries z = compute_Z(g, degree_max);
    DegreeSeries f = free_energy(z);
    for (int d = 1; d <= degree_max; ++d)
        c.expect(f.coeff({d}) == conifold_multicover_form(d),
                 "conifold [Q^" + std::to_string(d) + "] log Z mismatch");
    if (degree_max >= 2) {
        TableMeta meta{"conifold", g.hash(), degree_max};
        InvariantTable table = extract_gw(f, 2, meta);
        c.expect(table.entries[{{1}, 0}] == 1, "N_{0,1} != 1");
        c.expect(table.entries[{{1}, 1}] == Rational(1, 12), "N_{1,1} != 1/12");
        c.expect(table.entries[{{1}, 2}] == Rational(1, 240), "N_{2,1} != 1/240");
        c.expect(table.entries[{{2}, 0}] == Rational(1, 8), "N_{0,2} != 1/8");
        GVTable gv = extract_gv(f, 2, degree_max, meta);
        c.expect(gv.integral(), "conifold GV non-integral");
        c.expect(gv.entries[{{1}, 0}] == 1, "conifold n_{0,1} != 1");
        long long others = 0;
        for (const auto& [key, n] : gv.entries)
            if (!(key.degree == std::vector<int>{1} && key.genus == 0) && n != 0) ++others;
        c.expect(others == 0, "conifold has spurious GV entries");
    }
    return finish("conifold_multicover_D" + std::to_string(degree_max), c, start);
}

CheckResult check_degeneration() {
    auto start = std::chrono::steady_clock::now();
    Checker c;
    {
        FtcyGraph g = FtcyGraph::builtin("conifold");
        for (int d = 1; d <= 3; ++d)
            c.expect(degeneration_check(g, 0, d), "conifold degeneration fails at D=" +
                                                      std::to_string(d));
    }
    for (const char* name : {"local_p2", "local_p1xp1"}) {
        FtcyGraph g = FtcyGraph::builtin(name);
        for (std::size_t e = 0; e < g.edges.size(); ++e)
            c.expect(degeneration_check(g, e, 2),
                     std::string(name) + " degeneration fails at edge " + std::to_string(e));
    }
    return finish("degeneration_cut_consistency", c, start);
}

CheckResult check_gv_local_p2(int degree_max, int genus_max) {
    auto start = std::chrono::steady_clock::now();
    Checker c;
    FtcyGraph g = FtcyGraph::builtin("local_p2");
    DegreeSeries z = compute_Z(g, degree_max);
    DegreeSeries f = free_energy(z).collapsed("Q");
    TableMeta meta{"local_p2", g.hash(), degree_max};
    GVTable gv = extract_gv(f, genus_max, degree_max, meta);
    c.expect(gv.integral(),
             gv.violations.empty() ? std::string("non-integral GV") : gv.violations.front());
    c.expect(gv.entries[{{1}, 0}] == 3, "local_p2 n_{0,1} != 3");
    return finish("gv_integrality_local_p2_d" + std::to_string(degree_max), c, start);
}

CheckResult check_framing_consistency(int total_size_max, int order) {
    auto start = std::chrono::steady_clock::now();
    Checker c;
    const std::vector<std::array<long long, 3>> framings = {
        {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, -1, 1}, {-1, -1, -1}};
    for (const PartitionTriple& mu : triples_up_to(total_size_max)) {
        // all triples with matching sizes
        std::vector<PartitionTriple> block;
        for (const Partition& n1 : partitions_of(mu[0].size()))
            for (const Partition& n2 : partitions_of(mu[1].size()))
                for (const Partition& n3 : partitions_of(mu[2].size()))
                    block.push_back({n1, n2, n3});
        AmplitudeTable rep_zero;
        for (const PartitionTriple& nu : block) rep_zero[nu] = w_vertex(nu);
        WindingSeriesTable wind_zero;
        for (const PartitionTriple& nu : block)
            wind_zero[nu] = expand_q_exp(rep_to_winding(rep_zero, nu), order);
        for (const auto& n : framings) {
            AmplitudeTable rep_framed;
            for (const PartitionTriple& nu : block)
                rep_framed[nu] = apply_framing(rep_zero[nu], nu, n);
            USeries route1 = expand_q_exp(rep_to_winding(rep_framed, mu), order);
            USeries route2 = framing_transform_winding(wind_zero, n, mu, order);
            c.expect(route1.equal_through(route2, order),
                     "framing propositions disagree at " + triple_str(mu));
        }
    }
    return finish("framing_rep_vs_winding_size" + std::to_string(total_size_max), c, start);
}

CheckResult check_psi() {
    auto start = std::chrono::steady_clock::now();
    Checker c;
    c.expect(psi_integral({0, 0, 0}) == 1, "<tau_0^3>_0 != 1");
    c.expect(psi_integral({1}) == Rational(1, 24), "<tau_1>_1 != 1/24");
    c.expect(psi_integral({0, 0, 0, 1}) == 1, "<tau_0^3 tau_1>_0 != 1");
    c.expect(psi_integral({4}) == Rational(1, 1152), "<tau_4>_2 != 1/1152");
    // string and dilaton identities over all stable multisets with n <= 8
    std::function<void(std::vector<int>&, int, int)> gen = [&](std::vector<int>& stack,
                                                               int max_part, int budget) {
        if (!stack.empty()) {
            long long total = 0;
            for (int v : stack) total += v;
            long long n = static_cast<long long>(stack.size());
            long long three_g = total - n + 3;
            if (three_g >= 0 && three_g % 3 == 0) {
                Rational base = psi_integral(stack);
                int g = static_cast<int>(three_g / 3);
                // string
                std::vector<int> with_zero = stack;
                with_zero.push_back(0);
                Rational lhs = psi_integral(with_zero);
                Rational rhs(0);
                for (std::size_t j = 0; j < stack.size(); ++j) {
                    if (stack[j] == 0) continue;
                    std::vector<int> lowered = stack;
                    lowered[j] -= 1;
                    rhs += psi_integral(lowered);
                }
                c.expect(lhs == rhs, "string equation fails");
                // dilaton
                std::vector<int> with_one = stack;
                with_one.push_back(1);
                Rational dil = psi_integral(with_one);
                Rational want = Rational(2 * g - 2 + static_cast<int>(stack.size())) * base;
                c.expect(dil == want, "dilaton equation fails");
            }
        }
        if (static_cast<int>(stack.size()) >= 8) return;
        for (int v = std::min(max_part, budget); v >= 0; --v) {
            stack.push_back(v);
            gen(stack, v, budget - v);
            stack.pop_back();
        }
    };
    std::vector<int> stack;
    gen(stack, 10, 14);
    // multiset symmetry
    c.expect(psi_integral({2, 0, 1}) == psi_integral({0, 1, 2}), "ordering changed the value");
    return finish("psi_recursion", c, start);
}

std::vector<CheckResult> run_selftest(SelftestLevel level) {
    std::vector<CheckResult> out;
    if (level == SelftestLevel::quick) {
        out.push_back(check_wtw_identity(3));
        out.push_back(check_orthogonality(5));
        out.push_back(check_conifold_multicover(2));
        return out;
    }
    out.push_back(check_wtw_identity(5));
    out.push_back(check_orthogonality(8));
    out.push_back(check_burnside_bruteforce(4, 4));
    out.push_back(check_lr_oracle(6));
    out.push_back(check_skew_oracle(6, 30, 30));
    out.push_back(check_conifold_multicover(3));
    out.push_back(check_degeneration());
    out.push_back(check_gv_local_p2(3, 3));
    out.push_back(check_framing_consistency(3, 6));
    out.push_back(check_psi());
    return out;
}

bool all_pass(const std::vector<CheckResult>& results) {
    for (const CheckResult& r : results)
        if (!r.pass) return false;
    return true;
}

std::string render_selftest_report(const std::vector<CheckResult>& results) {
    std::ostringstream os;
    for (const CheckResult& r : results) {
        os << (r.pass ? "pass" : "fail") << " " << r.name << " checks=" << r.checks
           << " time_ms=" << r.time_ms;
        if (!r.pass) os << " detail=\"" << r.detail << "\"";
        os << "\n";
    }
    os << "selftest: " << (all_pass(results) ? "pass" : "fail") << "\n";
    return os.str();
}

}  // namespace vtx
