#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "vtx/partition.hpp"

namespace vtx {

struct SlopeVector {
    long long x = 0;
    long long y = 0;
    bool operator==(const SlopeVector&) const = default;
    SlopeVector operator-() const { return {-x, -y}; }
    friend SlopeVector operator-(const SlopeVector& a, const SlopeVector& b) {
        return {a.x - b.x, a.y - b.y};
    }
    friend SlopeVector operator+(const SlopeVector& a, const SlopeVector& b) {
        return {a.x + b.x, a.y + b.y};
    }
    SlopeVector scaled(long long k) const { return {k * x, k * y}; }
    bool is_primitive() const;
    std::string str() const;
};

long long det(const SlopeVector& a, const SlopeVector& b);

struct FtcyVertex {
    std::string id;
    std::array<SlopeVector, 3> cyclic;  // outgoing slopes, counterclockwise
    bool operator==(const FtcyVertex&) const = default;
};

struct FtcyEdge {
    std::string from;
    std::string to;
    SlopeVector dir_from;
    SlopeVector dir_to;
    std::string kahler;
    bool operator==(const FtcyEdge&) const = default;
};

struct FtcyLeg {
    std::string vertex;
    SlopeVector dir;
    SlopeVector framing;
    Partition boundary;
    bool operator==(const FtcyLeg&) const = default;
};

// Raised by parse when a syntactically well-formed document fails
// validation; the individual violations ride along.
class GraphInvalid : public std::runtime_error {
public:
    explicit GraphInvalid(std::vector<std::string> violations);
    const std::vector<std::string>& violations() const { return violations_; }

private:
    std::vector<std::string> violations_;
};

// Planar trivalent graph with integer slopes, framings and per-edge Kahler
// variables. Immutable in spirit: build, validate, then share freely.
struct FtcyGraph {
    std::vector<FtcyVertex> vertices;
    std::vector<FtcyEdge> edges;
    std::vector<FtcyLeg> legs;

    bool operator==(const FtcyGraph&) const = default;

    // Builtins: c3, conifold, local_p2, local_p1xp1.
    static FtcyGraph builtin(const std::string& name);

    // Strict JSON reader: unknown fields are rejected, all fields required.
    // Throws std::invalid_argument on syntax/shape problems and GraphInvalid
    // when validation fails.
    static FtcyGraph parse(const std::string& json_text);
    std::string serialize() const;

    // Every violated invariant, with its location; empty means valid.
    std::vector<std::string> validate() const;
    void ensure_valid() const;  // throws GraphInvalid if validate() is nonempty

    int vertex_index(const std::string& id) const;  // -1 if absent

    struct Slot {
        enum class Kind { EdgeFrom, EdgeTo, Leg };
        Kind kind;
        std::size_t index;  // edge or leg index
        SlopeVector dir;
    };
    // The three incident slots of a vertex, resolved against its stored
    // cyclic order. Requires a structurally valid graph.
    std::array<Slot, 3> slots_ccw(std::size_t vertex) const;

    // Normal-bundle degree n of a compact edge (O(n) + O(-n-2)), computed
    // from the given end; the two ends give n and -n-2.
    long long edge_framing_at(std::size_t edge, bool from_side) const;
    long long edge_framing(std::size_t edge) const { return edge_framing_at(edge, true); }

    // Integer framing of a leg, solved from f = w' - n w against the
    // adjacent slope w' selected by det matching.
    long long leg_framing(std::size_t leg) const;

    // Stable content hash for provenance metadata.
    std::string hash() const;
};

}  // namespace vtx
