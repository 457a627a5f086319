#pragma once

#include <array>
#include <map>

#include "vtx/partition.hpp"
#include "vtx/qrat.hpp"

namespace vtx {

// Hopf-link amplitude
//   W_{mu,nu}(q) = q^{(kappa_mu+kappa_nu)/2}
//                  sum_lambda s_{mu^t/lambda}(q^-rho) s_{nu^t/lambda}(q^-rho),
// a finite sum over lambda inside mu^t and nu^t. Symmetric in (mu, nu).
QRat w_two(const Partition& mu, const Partition& nu);

// W_mu = W_{mu, empty}.
QRat w_one(const Partition& mu);

// Three-leg vertex amplitude
//   W_{mu1,mu2,mu3} = q^{(kappa_{mu2}+kappa_{mu3})/2}
//     sum c^{mu1}_{eta,rho1} c^{mu3^t}_{eta,rho3^t}
//         W_{mu2^t,rho1} W_{mu2,rho3^t} / W_{mu2}.
QRat w_vertex(const PartitionTriple& mu);

// The same amplitude built from symmetric-group characters:
//   Wt_{rho1,rho2,rho3} = q^{-(kappa_{rho1}-2kappa_{rho2}-kappa_{rho3}/2)/2}
//     sum c^{nu+}_{nu1^t,rho2} c^{rho1}_{eta1^t,nu1} c^{rho3}_{eta3,nu3}
//         q^{(-2kappa_{nu+}-kappa_{nu3}/2)/2} W_{nu+,nu3}
//         (1/z_mu) chi_{eta1}(mu) chi_{eta3}(2mu).
// Agrees with w_vertex; that identity is a primary test surface.
QRat w_tilde_vertex(const PartitionTriple& rho);

// Framing twist x^{sum_i kappa_{mu_i} n_i} (an integer power of x because
// kappa is even).
QRat apply_framing(const QRat& amplitude, const PartitionTriple& mu,
                   const std::array<long long, 3>& framing);

using AmplitudeTable = std::map<PartitionTriple, QRat>;

// Representation basis -> winding basis:
//   F~_{mu} = sum_{nu: |nu_i|=|mu_i|} C~_{nu} prod_i chi_{nu_i}(C_{mu_i}) / z_{mu_i}.
// The table must contain every needed nu; a missing entry throws.
QRat rep_to_winding(const AmplitudeTable& rep_table, const PartitionTriple& mu);

}  // namespace vtx
