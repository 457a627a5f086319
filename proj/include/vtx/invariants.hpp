#pragma once

#include <map>
#include <string>
#include <vector>

#include "vtx/dseries.hpp"
#include "vtx/rational.hpp"

namespace vtx {

// Ordered degree-lex first, then genus; tables emit in this order.
struct InvariantKey {
    std::vector<int> degree;
    int genus = 0;
    auto operator<=>(const InvariantKey&) const = default;
};

struct TableMeta {
    std::string geometry;
    std::string graph_hash;
    int cutoff = 0;
};

// Gromov-Witten table: exact rational N_{g,d}.
struct InvariantTable {
    TableMeta meta;
    std::map<InvariantKey, Rational> entries;
};

// Gopakumar-Vafa table: values are stored exactly; the audit lists every
// entry that failed integrality (supposed to be empty -- a non-integer is
// the canary for a broken sign/transpose convention upstream).
struct GVTable {
    TableMeta meta;
    std::map<InvariantKey, Rational> entries;
    std::vector<std::string> violations;
    bool integral() const { return violations.empty(); }
};

// F = log Z; requires constant term 1.
DegreeSeries free_energy(const DegreeSeries& z);

// N_{g,d} = (-1)^{g-1} [u^{2g-2}] of the degree-d coefficient expanded at
// x = e^{u/2}. Throws if any odd-order u-coefficient survives.
InvariantTable extract_gw(const DegreeSeries& f, int g_max, const TableMeta& meta);

// Inverts F = sum n_{g,d} (1/k)(-1)^{g-1}(x^k - x^{-k})^{2g-2} Q^{k d}
// exactly, degree by degree. d_max must not exceed the series cutoff.
GVTable extract_gv(const DegreeSeries& f, int g_max, int d_max, const TableMeta& meta);

// Exact resummation of a GV table through the same atom; used to round-trip
// against the free energy.
DegreeSeries gv_resum(const GVTable& table, const std::vector<std::string>& vars, int cutoff);

enum class TableFormat { json, csv, text };

std::string emit_table(const InvariantTable& table, TableFormat format);
std::string emit_table(const GVTable& table, TableFormat format);

}  // namespace vtx
