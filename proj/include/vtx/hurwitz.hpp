#pragma once

#include <array>
#include <map>

#include "vtx/partition.hpp"
#include "vtx/useries.hpp"

namespace vtx {

// Double-Hurwitz generating series by the Burnside character sum:
//   Phi_{nu,mu}(s) = sum_{sigma |- d} e^{kappa_sigma s / 2}
//                    (chi_sigma(C_nu)/z_nu)(chi_sigma(C_mu)/z_mu),
// truncated at the given order in the formal branch variable. Requires
// |nu| == |mu| >= 1. The constant term is delta_{nu,mu}/z_mu.
USeries phi(const Partition& nu, const Partition& mu, int order);

// Transposition-factorization count in S_d, normalized by d!:
// #{(a, t_1..t_r) : a in C_nu, t_i transpositions,
//   cycle type of (a t_1 ... t_r)^{-1} equals mu} / d!.
// Matches the Burnside series: phi coefficient of s^r equals this over r!.
// Guarded at d <= 6.
Rational hurwitz_bruteforce(const Partition& nu, const Partition& mu, int r);

using WindingSeriesTable = std::map<PartitionTriple, USeries>;

// Framing dependence in the winding basis:
//   F~_mu(n) = sum_{nu: |nu_i|=|mu_i|} F~_nu(0) prod_i z_{nu_i} Phi_{nu_i,mu_i}(n_i u).
// zero_framing must contain every needed triple to the requested order.
USeries framing_transform_winding(const WindingSeriesTable& zero_framing,
                                  const std::array<long long, 3>& framing,
                                  const PartitionTriple& mu, int order);

}  // namespace vtx
