#include "vtx/graph.hpp"

#include <json.hpp>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace vtx {

using nlohmann::json;

bool SlopeVector::is_primitive() const {
    if (x == 0 && y == 0) return false;
    long long a = x < 0 ? -x : x;
    long long b = y < 0 ? -y : y;
    return std::gcd(a, b) == 1;
}

std::string SlopeVector::str() const {
    return "(" + std::to_string(x) + "," + std::to_string(y) + ")";
}

long long det(const SlopeVector& a, const SlopeVector& b) { return a.x * b.y - a.y * b.x; }

GraphInvalid::GraphInvalid(std::vector<std::string> violations)
    : std::runtime_error("invalid graph: " +
                         (violations.empty() ? std::string("unknown") : violations.front()) +
                         (violations.size() > 1 ? " (+" + std::to_string(violations.size() - 1) +
                                                      " more)"
                                                : "")),
      violations_(std::move(violations)) {}

int FtcyGraph::vertex_index(const std::string& id) const {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        if (vertices[i].id == id) return static_cast<int>(i);
    return -1;
}

namespace {

struct RawSlot {
    FtcyGraph::Slot::Kind kind;
    std::size_t index;
    SlopeVector dir;
};

std::vector<RawSlot> incident_slots(const FtcyGraph& g, std::size_t v) {
    std::vector<RawSlot> out;
    const std::string& id = g.vertices[v].id;
    for (std::size_t e = 0; e < g.edges.size(); ++e) {
        if (g.edges[e].from == id)
            out.push_back({FtcyGraph::Slot::Kind::EdgeFrom, e, g.edges[e].dir_from});
        if (g.edges[e].to == id)
            out.push_back({FtcyGraph::Slot::Kind::EdgeTo, e, g.edges[e].dir_to});
    }
    for (std::size_t l = 0; l < g.legs.size(); ++l)
        if (g.legs[l].vertex == id)
            out.push_back({FtcyGraph::Slot::Kind::Leg, l, g.legs[l].dir});
    return out;
}

}  // namespace

std::vector<std::string> FtcyGraph::validate() const {
    std::vector<std::string> bad;
    std::set<std::string> ids;
    for (const FtcyVertex& v : vertices) {
        if (v.id.empty()) bad.push_back("vertex with empty id");
        if (!ids.insert(v.id).second) bad.push_back("duplicate vertex id '" + v.id + "'");
    }
    std::set<std::string> kahlers;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        const FtcyEdge& ed = edges[e];
        std::string where = "edge '" + ed.kahler + "'";
        if (ed.kahler.empty()) bad.push_back("edge with empty kahler name");
        else if (!kahlers.insert(ed.kahler).second)
            bad.push_back("duplicate kahler name '" + ed.kahler + "'");
        if (vertex_index(ed.from) < 0) bad.push_back(where + ": unknown vertex '" + ed.from + "'");
        if (vertex_index(ed.to) < 0) bad.push_back(where + ": unknown vertex '" + ed.to + "'");
        if (!ed.dir_from.is_primitive())
            bad.push_back(where + ": non-primitive slope " + ed.dir_from.str());
        if (!ed.dir_to.is_primitive())
            bad.push_back(where + ": non-primitive slope " + ed.dir_to.str());
        if (ed.dir_to != -ed.dir_from)
            bad.push_back(where + ": end directions are not negatives");
    }
    for (std::size_t l = 0; l < legs.size(); ++l) {
        const FtcyLeg& leg = legs[l];
        std::string where = "leg " + std::to_string(l);
        if (vertex_index(leg.vertex) < 0)
            bad.push_back(where + ": unknown vertex '" + leg.vertex + "'");
        if (!leg.dir.is_primitive())
            bad.push_back(where + ": non-primitive slope " + leg.dir.str());
        if (!leg.framing.is_primitive())
            bad.push_back(where + ": non-primitive framing " + leg.framing.str());
    }
    if (!bad.empty()) return bad;  // structural problems make the rest moot

    for (std::size_t v = 0; v < vertices.size(); ++v) {
        const FtcyVertex& vtx = vertices[v];
        std::string where = "vertex '" + vtx.id + "'";
        std::vector<RawSlot> slots = incident_slots(*this, v);
        if (slots.size() != 3) {
            bad.push_back(where + ": " + std::to_string(slots.size()) +
                          " incident slots, need 3 (trivalent)");
            continue;
        }
        std::set<std::pair<long long, long long>> dirs;
        for (const RawSlot& s : slots) dirs.insert({s.dir.x, s.dir.y});
        if (dirs.size() != 3) {
            bad.push_back(where + ": incident directions are not distinct");
            continue;
        }
        bool cyclic_ok = true;
        for (const SlopeVector& c : vtx.cyclic)
            if (!dirs.count({c.x, c.y})) cyclic_ok = false;
        std::set<std::pair<long long, long long>> cyc;
        for (const SlopeVector& c : vtx.cyclic) cyc.insert({c.x, c.y});
        if (!cyclic_ok || cyc.size() != 3) {
            bad.push_back(where + ": cyclic order does not match incident slopes");
            continue;
        }
        SlopeVector sum = vtx.cyclic[0] + vtx.cyclic[1] + vtx.cyclic[2];
        if (sum != SlopeVector{0, 0})
            bad.push_back(where + ": vertex balance violated, slopes sum to " + sum.str());
        for (const SlopeVector& c : vtx.cyclic)
            if (!c.is_primitive())
                bad.push_back(where + ": non-primitive slope " + c.str());
        long long d = det(vtx.cyclic[0], vtx.cyclic[1]);
        if (d != 1 && d != -1)
            bad.push_back(where + ": slopes do not form a lattice basis");
    }
    if (!bad.empty()) return bad;

    for (std::size_t e = 0; e < edges.size(); ++e) {
        try {
            long long n_from = edge_framing_at(e, true);
            long long n_to = edge_framing_at(e, false);
            if (n_to != -n_from - 2)
                bad.push_back("edge '" + edges[e].kahler + "': endpoint degrees " +
                              std::to_string(n_from) + "," + std::to_string(n_to) +
                              " are not complementary");
        } catch (const std::exception& ex) {
            bad.push_back("edge '" + edges[e].kahler + "': " + ex.what());
        }
    }
    for (std::size_t l = 0; l < legs.size(); ++l) {
        try {
            (void)leg_framing(l);
        } catch (const std::exception& ex) {
            bad.push_back("leg " + std::to_string(l) + ": " + ex.what());
        }
    }
    return bad;
}

void FtcyGraph::ensure_valid() const {
    std::vector<std::string> bad = validate();
    if (!bad.empty()) throw GraphInvalid(std::move(bad));
}

std::array<FtcyGraph::Slot, 3> FtcyGraph::slots_ccw(std::size_t vertex) const {
    std::vector<RawSlot> raw = incident_slots(*this, vertex);
    if (raw.size() != 3) throw std::logic_error("slots_ccw: vertex is not trivalent");
    std::array<Slot, 3> out{};
    for (int i = 0; i < 3; ++i) {
        const SlopeVector& want = vertices[vertex].cyclic[static_cast<std::size_t>(i)];
        bool found = false;
        for (const RawSlot& s : raw) {
            if (s.dir == want) {
                out[static_cast<std::size_t>(i)] = Slot{s.kind, s.index, s.dir};
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("slots_ccw: cyclic entry has no matching slot");
    }
    return out;
}

namespace {

// The two slots at `vertex` other than the one pointing along `w`, in
// cyclic order starting just after w.
std::array<SlopeVector, 2> adjacent_slopes(const FtcyGraph& g, std::size_t vertex,
                                           const SlopeVector& w) {
    const auto& cyc = g.vertices[vertex].cyclic;
    int at = -1;
    for (int i = 0; i < 3; ++i)
        if (cyc[static_cast<std::size_t>(i)] == w) at = i;
    if (at < 0) throw std::logic_error("adjacent_slopes: direction not found at vertex");
    return {cyc[static_cast<std::size_t>((at + 1) % 3)],
            cyc[static_cast<std::size_t>((at + 2) % 3)]};
}

long long solve_parallel(const SlopeVector& target, const SlopeVector& w) {
    // target = k * w for integer k; w is primitive and nonzero
    if (det(target, w) != 0) throw std::domain_error("transport relation unsolvable");
    if (w.x != 0) {
        if (target.x % w.x != 0) throw std::domain_error("transport relation unsolvable");
        return target.x / w.x;
    }
    if (target.y % w.y != 0) throw std::domain_error("transport relation unsolvable");
    return target.y / w.y;
}

}  // namespace

long long FtcyGraph::edge_framing_at(std::size_t edge, bool from_side) const {
    const FtcyEdge& e = edges.at(edge);
    std::size_t u = static_cast<std::size_t>(vertex_index(from_side ? e.from : e.to));
    std::size_t v = static_cast<std::size_t>(vertex_index(from_side ? e.to : e.from));
    SlopeVector w = from_side ? e.dir_from : e.dir_to;
    std::array<SlopeVector, 2> a = adjacent_slopes(*this, u, w);
    std::array<SlopeVector, 2> b = adjacent_slopes(*this, v, -w);
    // pair far slopes to near ones by det(w, .)
    long long d1 = det(w, a[0]);
    SlopeVector b1 = (det(w, b[0]) == d1) ? b[0] : b[1];
    SlopeVector b2 = (det(w, b[0]) == d1) ? b[1] : b[0];
    if (det(w, b1) != d1 || det(w, b2) != det(w, a[1]))
        throw std::domain_error("transport relation unsolvable (no det match)");
    long long n = solve_parallel(a[0] - b1, w);                // b1 = a1 - n w
    long long check = solve_parallel(b2 - a[1], w);            // b2 = a2 + (n+2) w
    if (check != n + 2) throw std::domain_error("transport relation unsolvable (ends disagree)");
    return n;
}

long long FtcyGraph::leg_framing(std::size_t leg) const {
    const FtcyLeg& l = legs.at(leg);
    std::size_t v = static_cast<std::size_t>(vertex_index(l.vertex));
    std::array<SlopeVector, 2> adj = adjacent_slopes(*this, v, l.dir);
    long long df = det(l.dir, l.framing);
    if (df != 1 && df != -1)
        throw std::domain_error("framing vector is not unimodular against the leg direction");
    const SlopeVector& wprime = (det(l.dir, adj[0]) == df) ? adj[0] : adj[1];
    if (det(l.dir, wprime) != df)
        throw std::domain_error("framing vector matches no adjacent slope");
    return solve_parallel(wprime - l.framing, l.dir);  // f = w' - n w
}

FtcyGraph FtcyGraph::builtin(const std::string& name) {
    FtcyGraph g;
    auto leg_default = [](const std::string& vertex, SlopeVector dir, SlopeVector framing) {
        return FtcyLeg{vertex, dir, framing, Partition{}};
    };
    if (name == "c3") {
        g.vertices = {{"v0", {SlopeVector{1, 0}, SlopeVector{0, 1}, SlopeVector{-1, -1}}}};
        g.legs = {leg_default("v0", {1, 0}, {0, 1}), leg_default("v0", {0, 1}, {-1, -1}),
                  leg_default("v0", {-1, -1}, {1, 0})};
    } else if (name == "conifold") {
        g.vertices = {{"v0", {SlopeVector{1, 0}, SlopeVector{0, 1}, SlopeVector{-1, -1}}},
                      {"v1", {SlopeVector{1, 1}, SlopeVector{-1, 0}, SlopeVector{0, -1}}}};
        g.edges = {{"v0", "v1", {1, 0}, {-1, 0}, "Q1"}};
        g.legs = {leg_default("v0", {0, 1}, {-1, -1}), leg_default("v0", {-1, -1}, {1, 0}),
                  leg_default("v1", {1, 1}, {-1, 0}), leg_default("v1", {0, -1}, {1, 1})};
    } else if (name == "local_p2") {
        g.vertices = {{"a", {SlopeVector{1, 0}, SlopeVector{0, 1}, SlopeVector{-1, -1}}},
                      {"b", {SlopeVector{-1, 1}, SlopeVector{-1, 0}, SlopeVector{2, -1}}},
                      {"c", {SlopeVector{-1, 2}, SlopeVector{0, -1}, SlopeVector{1, -1}}}};
        g.edges = {{"a", "b", {1, 0}, {-1, 0}, "Q1"},
                   {"b", "c", {-1, 1}, {1, -1}, "Q2"},
                   {"c", "a", {0, -1}, {0, 1}, "Q3"}};
        g.legs = {leg_default("a", {-1, -1}, {1, 0}), leg_default("b", {2, -1}, {-1, 1}),
                  leg_default("c", {-1, 2}, {0, -1})};
    } else if (name == "local_p1xp1") {
        g.vertices = {{"a", {SlopeVector{1, 0}, SlopeVector{0, 1}, SlopeVector{-1, -1}}},
                      {"b", {SlopeVector{0, 1}, SlopeVector{-1, 0}, SlopeVector{1, -1}}},
                      {"c", {SlopeVector{1, 1}, SlopeVector{-1, 0}, SlopeVector{0, -1}}},
                      {"d", {SlopeVector{1, 0}, SlopeVector{-1, 1}, SlopeVector{0, -1}}}};
        g.edges = {{"a", "b", {1, 0}, {-1, 0}, "Q1"},
                   {"b", "c", {0, 1}, {0, -1}, "Q2"},
                   {"c", "d", {-1, 0}, {1, 0}, "Q3"},
                   {"d", "a", {0, -1}, {0, 1}, "Q4"}};
        g.legs = {leg_default("a", {-1, -1}, {1, 0}), leg_default("b", {1, -1}, {0, 1}),
                  leg_default("c", {1, 1}, {-1, 0}), leg_default("d", {-1, 1}, {0, -1})};
    } else {
        throw std::invalid_argument("builtin: unknown geometry '" + name + "'");
    }
    g.ensure_valid();
    return g;
}

namespace {

void reject_unknown(const json& obj, std::initializer_list<const char*> allowed,
                    const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed)
            if (it.key() == a) ok = true;
        if (!ok)
            throw std::invalid_argument("graph: unknown field '" + it.key() + "' in " + where);
    }
}

const json& require(const json& obj, const char* field, const std::string& where) {
    auto it = obj.find(field);
    if (it == obj.end())
        throw std::invalid_argument("graph: missing field '" + std::string(field) + "' in " +
                                    where);
    return *it;
}

long long read_int(const json& j, const std::string& where) {
    if (!j.is_number_integer())
        throw std::invalid_argument("graph: expected integer in " + where);
    return j.get<long long>();
}

SlopeVector read_slope(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("graph: expected [a,b] slope in " + where);
    return {read_int(j[0], where), read_int(j[1], where)};
}

Partition read_partition(const json& j, const std::string& where) {
    if (!j.is_array()) throw std::invalid_argument("graph: expected partition array in " + where);
    std::vector<int> parts;
    for (const json& p : j) {
        long long v = read_int(p, where);
        if (v <= 0 || v > 1000000)
            throw std::invalid_argument("graph: partition part out of range in " + where);
        parts.push_back(static_cast<int>(v));
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::exception& ex) {
        throw std::invalid_argument("graph: " + std::string(ex.what()) + " in " + where);
    }
}

std::string read_string(const json& j, const std::string& where) {
    if (!j.is_string()) throw std::invalid_argument("graph: expected string in " + where);
    return j.get<std::string>();
}

}  // namespace

FtcyGraph FtcyGraph::parse(const std::string& json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& ex) {
        throw std::invalid_argument("graph: JSON syntax error: " + std::string(ex.what()));
    }
    if (!doc.is_object()) throw std::invalid_argument("graph: top level must be an object");
    reject_unknown(doc, {"vertices", "edges", "legs"}, "document");
    FtcyGraph g;
    const json& jv = require(doc, "vertices", "document");
    if (!jv.is_array()) throw std::invalid_argument("graph: 'vertices' must be an array");
    for (const json& v : jv) {
        if (!v.is_object()) throw std::invalid_argument("graph: vertex must be an object");
        reject_unknown(v, {"id", "cyclic"}, "vertex");
        std::string id = read_string(require(v, "id", "vertex"), "vertex id");
        const json& cyc = require(v, "cyclic", "vertex '" + id + "'");
        if (!cyc.is_array() || cyc.size() != 3)
            throw std::invalid_argument("graph: 'cyclic' must list 3 slopes in vertex '" + id +
                                        "'");
        FtcyVertex out;
        out.id = id;
        for (int i = 0; i < 3; ++i)
            out.cyclic[static_cast<std::size_t>(i)] =
                read_slope(cyc[static_cast<std::size_t>(i)], "vertex '" + id + "' cyclic");
        g.vertices.push_back(std::move(out));
    }
    const json& je = require(doc, "edges", "document");
    if (!je.is_array()) throw std::invalid_argument("graph: 'edges' must be an array");
    for (const json& e : je) {
        if (!e.is_object()) throw std::invalid_argument("graph: edge must be an object");
        reject_unknown(e, {"from", "to", "dir_from", "dir_to", "kahler"}, "edge");
        FtcyEdge out;
        out.kahler = read_string(require(e, "kahler", "edge"), "edge kahler");
        std::string where = "edge '" + out.kahler + "'";
        out.from = read_string(require(e, "from", where), where);
        out.to = read_string(require(e, "to", where), where);
        out.dir_from = read_slope(require(e, "dir_from", where), where);
        out.dir_to = read_slope(require(e, "dir_to", where), where);
        g.edges.push_back(std::move(out));
    }
    const json& jl = require(doc, "legs", "document");
    if (!jl.is_array()) throw std::invalid_argument("graph: 'legs' must be an array");
    for (std::size_t i = 0; i < jl.size(); ++i) {
        const json& l = jl[i];
        std::string where = "leg " + std::to_string(i);
        if (!l.is_object()) throw std::invalid_argument("graph: leg must be an object");
        reject_unknown(l, {"vertex", "dir", "framing", "partition"}, where);
        FtcyLeg out;
        out.vertex = read_string(require(l, "vertex", where), where);
        out.dir = read_slope(require(l, "dir", where), where);
        out.framing = read_slope(require(l, "framing", where), where);
        out.boundary = read_partition(require(l, "partition", where), where);
        g.legs.push_back(std::move(out));
    }
    g.ensure_valid();
    return g;
}

std::string FtcyGraph::serialize() const {
    json doc;
    doc["vertices"] = json::array();
    for (const FtcyVertex& v : vertices) {
        json jv;
        jv["id"] = v.id;
        json cyc = json::array();
        for (const SlopeVector& s : v.cyclic) cyc.push_back({s.x, s.y});
        jv["cyclic"] = cyc;
        doc["vertices"].push_back(jv);
    }
    doc["edges"] = json::array();
    for (const FtcyEdge& e : edges) {
        json je;
        je["from"] = e.from;
        je["to"] = e.to;
        je["dir_from"] = {e.dir_from.x, e.dir_from.y};
        je["dir_to"] = {e.dir_to.x, e.dir_to.y};
        je["kahler"] = e.kahler;
        doc["edges"].push_back(je);
    }
    doc["legs"] = json::array();
    for (const FtcyLeg& l : legs) {
        json jl;
        jl["vertex"] = l.vertex;
        jl["dir"] = {l.dir.x, l.dir.y};
        jl["framing"] = {l.framing.x, l.framing.y};
        json parts = json::array();
        for (int p : l.boundary.parts()) parts.push_back(p);
        jl["partition"] = parts;
        doc["legs"].push_back(jl);
    }
    return doc.dump(2) + "\n";
}

std::string FtcyGraph::hash() const {
    std::string data = serialize();
    unsigned long long h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex << h;
    return os.str();
}

}  // namespace vtx
