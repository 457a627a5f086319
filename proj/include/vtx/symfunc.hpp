#pragma once

#include "vtx/partition.hpp"
#include "vtx/qrat.hpp"
#include "vtx/rational.hpp"

namespace vtx {

// Irreducible S_d character chi_sigma evaluated on the conjugacy class of
// cycle type nu; requires |sigma| == |nu|. Murnaghan-Nakayama with a shared
// memo table (thread-safe).
Integer character(const Partition& sigma, const Partition& nu);

// Littlewood-Richardson coefficient c^mu_{eta,rho}; 0 for incompatible
// shapes, never an error.
Integer lr_coefficient(const Partition& mu, const Partition& eta, const Partition& rho);

// Principal specialization s_nu(q^{-1/2}, q^{-3/2}, ...) as an exact
// rational function of x = q^{1/2}.
QRat schur_principal(const Partition& nu);

// Skew version s_{mu/lambda}(q^{-1/2}, q^{-3/2}, ...); zero when lambda is
// not contained in mu.
QRat skew_schur_principal(const Partition& mu, const Partition& lambda);

}  // namespace vtx
