#include "vtx/gluing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "vtx/parallel.hpp"
#include "vtx/symfunc.hpp"
#include "vtx/vertex.hpp"

namespace vtx {

namespace {

// Edge weight x-exponent sign; pinned by the conifold multiple-cover series
// together with the local_p2 integrality audit.
constexpr long long framing_exp_sign = 1;

QRat x_power_ll(long long k) {
    return QRat::monomial(Rational(1), static_cast<int>(k));
}

QRat edge_weight(long long n_e, const Partition& mu) {
    bool odd = (n_e % 2 != 0) && (mu.size() % 2 != 0);
    QRat w = x_power_ll(framing_exp_sign * (n_e + 1) * mu.kappa());
    if (odd) w = -w;
    return w;
}

struct GluingContext {
    const FtcyGraph* graph;
    std::vector<long long> edge_n;
    std::vector<long long> leg_n;
    std::vector<std::array<FtcyGraph::Slot, 3>> slots;
    QRat leg_factor;  // assignment-independent framing twist of the legs
};

GluingContext make_context(const FtcyGraph& g) {
    GluingContext ctx;
    ctx.graph = &g;
    ctx.edge_n.reserve(g.edges.size());
    for (std::size_t e = 0; e < g.edges.size(); ++e) ctx.edge_n.push_back(g.edge_framing(e));
    ctx.leg_factor = QRat(1);
    for (std::size_t l = 0; l < g.legs.size(); ++l) {
        long long n = g.leg_framing(l);
        ctx.leg_n.push_back(n);
        if (!g.legs[l].boundary.empty())
            ctx.leg_factor *= x_power_ll(n * g.legs[l].boundary.kappa());
    }
    ctx.slots.reserve(g.vertices.size());
    for (std::size_t v = 0; v < g.vertices.size(); ++v) ctx.slots.push_back(g.slots_ccw(v));
    return ctx;
}

QRat assignment_value(const GluingContext& ctx, const std::vector<Partition>& assign) {
    const FtcyGraph& g = *ctx.graph;
    QRat value = ctx.leg_factor;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        const Partition& mu = assign[e];
        if (mu.empty()) continue;
        value *= edge_weight(ctx.edge_n[e], mu);
    }
    for (std::size_t v = 0; v < g.vertices.size(); ++v) {
        PartitionTriple triple;
        for (int s = 0; s < 3; ++s) {
            const FtcyGraph::Slot& slot = ctx.slots[v][static_cast<std::size_t>(s)];
            switch (slot.kind) {
                case FtcyGraph::Slot::Kind::EdgeFrom:
                    triple[static_cast<std::size_t>(s)] = assign[slot.index];
                    break;
                case FtcyGraph::Slot::Kind::EdgeTo:
                    triple[static_cast<std::size_t>(s)] = assign[slot.index].conjugate();
                    break;
                case FtcyGraph::Slot::Kind::Leg:
                    triple[static_cast<std::size_t>(s)] = g.legs[slot.index].boundary;
                    break;
            }
        }
        value *= w_vertex(triple);
        if (value.is_zero()) return value;
    }
    return value;
}

void enumerate_assignments(std::size_t edge, int budget, std::vector<Partition>& current,
                           std::vector<std::vector<Partition>>& out) {
    if (edge == current.size()) {
        out.push_back(current);
        return;
    }
    for (int d = 0; d <= budget; ++d) {
        for (const Partition& mu : partitions_of(d)) {
            current[edge] = mu;
            enumerate_assignments(edge + 1, budget - d, current, out);
        }
    }
    current[edge] = Partition{};
}

std::vector<std::string> kahler_vars(const FtcyGraph& g) {
    std::vector<std::string> vars;
    vars.reserve(g.edges.size());
    for (const FtcyEdge& e : g.edges) vars.push_back(e.kahler);
    return vars;
}

}  // namespace

DegreeSeries compute_Z(const FtcyGraph& graph, int cutoff) {
    graph.ensure_valid();
    if (cutoff < 0) throw std::invalid_argument("compute_Z: negative cutoff");
    GluingContext ctx = make_context(graph);
    std::vector<std::vector<Partition>> assignments;
    std::vector<Partition> current(graph.edges.size());
    enumerate_assignments(0, cutoff, current, assignments);
    std::vector<QRat> values(assignments.size());
    parallel_for(assignments.size(),
                 [&](std::size_t i) { values[i] = assignment_value(ctx, assignments[i]); });
    DegreeSeries z(kahler_vars(graph), cutoff);
    for (std::size_t i = 0; i < assignments.size(); ++i) {
        std::vector<int> key(graph.edges.size());
        for (std::size_t e = 0; e < graph.edges.size(); ++e) key[e] = assignments[i][e].size();
        z.add_term(key, values[i]);
    }
    return z;
}

namespace {

SlopeVector next_ccw_after(const FtcyGraph& g, const std::string& vertex_id,
                           const SlopeVector& dir) {
    int vi = g.vertex_index(vertex_id);
    const auto& cyc = g.vertices[static_cast<std::size_t>(vi)].cyclic;
    for (int i = 0; i < 3; ++i)
        if (cyc[static_cast<std::size_t>(i)] == dir) return cyc[static_cast<std::size_t>((i + 1) % 3)];
    throw std::logic_error("cut_edge: direction not found at vertex");
}

}  // namespace

CutResult cut_edge(const FtcyGraph& graph, std::size_t edge) {
    graph.ensure_valid();
    if (edge >= graph.edges.size())
        throw std::invalid_argument("cut_edge: no such compact edge");
    const FtcyEdge cut = graph.edges[edge];
    FtcyGraph whole = graph;
    whole.edges.erase(whole.edges.begin() + static_cast<long>(edge));
    FtcyLeg leg_from{cut.from, cut.dir_from, next_ccw_after(graph, cut.from, cut.dir_from),
                     Partition{}};
    FtcyLeg leg_to{cut.to, cut.dir_to, next_ccw_after(graph, cut.to, cut.dir_to), Partition{}};
    whole.legs.push_back(leg_from);
    std::size_t from_leg_index = whole.legs.size() - 1;
    whole.legs.push_back(leg_to);
    std::size_t to_leg_index = whole.legs.size() - 1;

    // connected components over the remaining edges
    std::map<std::string, int> comp;
    for (const FtcyVertex& v : whole.vertices) comp[v.id] = -1;
    int n_comp = 0;
    for (const FtcyVertex& v : whole.vertices) {
        if (comp[v.id] != -1) continue;
        std::vector<std::string> stack{v.id};
        comp[v.id] = n_comp;
        while (!stack.empty()) {
            std::string cur = stack.back();
            stack.pop_back();
            for (const FtcyEdge& e : whole.edges) {
                if (e.from == cur && comp[e.to] == -1) {
                    comp[e.to] = n_comp;
                    stack.push_back(e.to);
                }
                if (e.to == cur && comp[e.from] == -1) {
                    comp[e.from] = n_comp;
                    stack.push_back(e.from);
                }
            }
        }
        ++n_comp;
    }

    CutResult result;
    if (n_comp == 1) {
        whole.ensure_valid();
        result.pieces.push_back(std::move(whole));
        result.from_piece = result.to_piece = 0;
        result.from_leg = from_leg_index;
        result.to_leg = to_leg_index;
        return result;
    }
    if (n_comp != 2) throw std::logic_error("cut_edge: unexpected component count");
    int from_comp = comp[cut.from];
    // piece 0 carries the from-side
    std::array<FtcyGraph, 2> pieces;
    auto piece_of = [&](const std::string& id) { return comp[id] == from_comp ? 0 : 1; };
    for (const FtcyVertex& v : whole.vertices)
        pieces[static_cast<std::size_t>(piece_of(v.id))].vertices.push_back(v);
    for (const FtcyEdge& e : whole.edges)
        pieces[static_cast<std::size_t>(piece_of(e.from))].edges.push_back(e);
    std::array<std::vector<std::size_t>, 2> leg_map;
    for (std::size_t l = 0; l < whole.legs.size(); ++l) {
        int p = piece_of(whole.legs[l].vertex);
        pieces[static_cast<std::size_t>(p)].legs.push_back(whole.legs[l]);
        leg_map[static_cast<std::size_t>(p)].push_back(l);
    }
    auto find_leg = [&](int piece, std::size_t original) {
        const auto& m = leg_map[static_cast<std::size_t>(piece)];
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] == original) return i;
        throw std::logic_error("cut_edge: lost a replacement leg");
    };
    result.from_piece = 0;
    result.to_piece = 1;
    result.from_leg = find_leg(0, from_leg_index);
    result.to_leg = find_leg(1, to_leg_index);
    pieces[0].ensure_valid();
    pieces[1].ensure_valid();
    result.pieces.push_back(std::move(pieces[0]));
    result.pieces.push_back(std::move(pieces[1]));
    return result;
}

namespace {

// Lift a series over a subset of variables into the enclosing variable list.
DegreeSeries embed(const DegreeSeries& s, const std::vector<std::string>& full_vars, int cutoff) {
    DegreeSeries out(full_vars, cutoff);
    std::vector<int> pos(s.vars().size());
    for (std::size_t i = 0; i < s.vars().size(); ++i) {
        auto it = std::find(full_vars.begin(), full_vars.end(), s.vars()[i]);
        if (it == full_vars.end()) throw std::logic_error("embed: variable missing from target");
        pos[i] = static_cast<int>(it - full_vars.begin());
    }
    for (const auto& [key, value] : s.terms()) {
        std::vector<int> full_key(full_vars.size(), 0);
        for (std::size_t i = 0; i < key.size(); ++i)
            full_key[static_cast<std::size_t>(pos[i])] = key[i];
        out.add_term(full_key, value);
    }
    return out;
}

}  // namespace

bool degeneration_check(const FtcyGraph& graph, std::size_t edge, int cutoff) {
    return degeneration_check_weighted(graph, edge, cutoff,
                                       [](const Partition& nu) { return nu.z_factor(); });
}

bool degeneration_check_weighted(const FtcyGraph& graph, std::size_t edge, int cutoff,
                                 const std::function<long long(const Partition&)>& zeta) {
    DegreeSeries lhs = compute_Z(graph, cutoff);
    long long n_e = graph.edge_framing(edge);
    std::string qvar = graph.edges[edge].kahler;
    CutResult cut = cut_edge(graph, edge);
    std::vector<std::string> full_vars = kahler_vars(graph);
    int q_pos = static_cast<int>(std::find(full_vars.begin(), full_vars.end(), qvar) -
                                 full_vars.begin());

    DegreeSeries rhs(full_vars, cutoff);
    for (int d = 0; d <= cutoff; ++d) {
        std::vector<Partition> profiles = partitions_of(d);
        DegreeSeries block(full_vars, cutoff);  // coefficient of Q_e^d, embedded
        if (cut.pieces.size() == 2) {
            // winding transforms of each side, then the zeta-weighted pairing
            std::map<Partition, DegreeSeries> z1, z2;
            for (const Partition& rho : profiles) {
                FtcyGraph g1 = cut.pieces[0];
                g1.legs[cut.from_leg].boundary = rho;
                z1.emplace(rho, compute_Z(g1, cutoff - d));
                FtcyGraph g2 = cut.pieces[1];
                g2.legs[cut.to_leg].boundary = rho;
                z2.emplace(rho, compute_Z(g2, cutoff - d));
            }
            for (const Partition& nu : profiles) {
                Rational inv_z(1, static_cast<long>(nu.z_factor()));
                inv_z.canonicalize();
                DegreeSeries a(kahler_vars(cut.pieces[0]), cutoff - d);
                DegreeSeries b(kahler_vars(cut.pieces[1]), cutoff - d);
                for (const Partition& rho : profiles) {
                    Integer chi_r = character(rho, nu);
                    if (chi_r == 0) continue;
                    QRat wa = edge_weight(n_e, rho) * QRat(Rational(chi_r) * inv_z);
                    for (const auto& [key, val] : z1.at(rho).terms()) a.add_term(key, val * wa);
                }
                for (const Partition& sigma : profiles) {
                    Integer chi_s = character(sigma, nu);
                    if (chi_s == 0) continue;
                    QRat wb = QRat(Rational(chi_s) * inv_z);
                    for (const auto& [key, val] : z2.at(sigma.conjugate()).terms())
                        b.add_term(key, val * wb);
                }
                QRat zeta_factor{Rational(static_cast<long>(zeta(nu)))};
                DegreeSeries paired = embed(a, full_vars, cutoff - d) *
                                      embed(b, full_vars, cutoff - d);
                for (const auto& [key, val] : paired.terms())
                    block.add_term(key, val * zeta_factor);
            }
        } else {
            // still connected: both boundary legs live on the same piece
            const FtcyGraph& piece = cut.pieces[0];
            std::map<std::pair<Partition, Partition>, DegreeSeries> zp;
            for (const Partition& rho : profiles) {
                for (const Partition& sigma : profiles) {
                    FtcyGraph g1 = piece;
                    g1.legs[cut.from_leg].boundary = rho;
                    g1.legs[cut.to_leg].boundary = sigma;
                    zp.emplace(std::make_pair(rho, sigma), compute_Z(g1, cutoff - d));
                }
            }
            for (const Partition& nu : profiles) {
                long long znu = nu.z_factor();
                Rational inv_z2(1, static_cast<long>(znu));
                inv_z2.canonicalize();
                inv_z2 = inv_z2 * inv_z2;
                DegreeSeries h(kahler_vars(piece), cutoff - d);
                for (const Partition& rho : profiles) {
                    Integer chi_r = character(rho, nu);
                    if (chi_r == 0) continue;
                    for (const Partition& sigma : profiles) {
                        Integer chi_s = character(sigma, nu);
                        if (chi_s == 0) continue;
                        QRat w = edge_weight(n_e, rho) *
                                 QRat(Rational(chi_r * chi_s) * inv_z2);
                        for (const auto& [key, val] :
                             zp.at(std::make_pair(rho, sigma.conjugate())).terms())
                            h.add_term(key, val * w);
                    }
                }
                QRat zeta_factor{Rational(static_cast<long>(zeta(nu)))};
                DegreeSeries lifted = embed(h, full_vars, cutoff - d);
                for (const auto& [key, val] : lifted.terms())
                    block.add_term(key, val * zeta_factor);
            }
        }
        for (const auto& [key, val] : block.terms()) {
            std::vector<int> full_key = key;
            full_key[static_cast<std::size_t>(q_pos)] += d;
            rhs.add_term(full_key, val);
        }
    }
    return lhs == rhs;
}

}  // namespace vtx
