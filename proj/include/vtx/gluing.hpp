#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "vtx/dseries.hpp"
#include "vtx/graph.hpp"

namespace vtx {

// Partition function of a validated FTCY graph, truncated at total degree
// `cutoff` in the per-edge Kahler variables. Each edge assignment mu_e
// contributes
//   prod_e (-1)^{n_e |mu_e|} x^{(n_e+1) kappa_{mu_e}} Q_e^{|mu_e|}
//   * prod_v W_(slots of v in cyclic order; mu_e on the from side, mu_e^t on
//     the to side, fixed boundary partitions on legs)
//   * prod_legs x^{n_leg kappa_{boundary}}.
DegreeSeries compute_Z(const FtcyGraph& graph, int cutoff);

struct CutResult {
    std::vector<FtcyGraph> pieces;  // one (still connected) or two
    // Where the replacement legs ended up: piece index + leg index.
    int from_piece = 0;
    std::size_t from_leg = 0;
    int to_piece = 0;
    std::size_t to_leg = 0;
};

// Replace a compact edge by a pair of legs (zero framing, empty boundary);
// the edge's Kahler variable is retired. Splits the graph when the edge was
// a bridge.
CutResult cut_edge(const FtcyGraph& graph, std::size_t edge);

// Degeneration consistency at one edge: compute_Z(graph) must equal the
// assembly over boundary partitions nu
//   sum_nu [edge weight at nu] * (winding transforms of the cut pieces
//   paired with weight zeta(nu)),
// where zeta defaults to the centralizer order z_nu. The zeta hook exists so
// tests can falsify the check.
bool degeneration_check(const FtcyGraph& graph, std::size_t edge, int cutoff);
bool degeneration_check_weighted(const FtcyGraph& graph, std::size_t edge, int cutoff,
                                 const std::function<long long(const Partition&)>& zeta);

}  // namespace vtx
