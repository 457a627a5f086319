#pragma once

#include <map>
#include <vector>

#include "vtx/partition.hpp"
#include "vtx/qrat.hpp"
#include "vtx/rational.hpp"

namespace vtx {

// Independent oracles used by the selftest suites and the acceptance tests.
// Everything here recomputes from first principles (tableau enumeration,
// monomial arithmetic, permutation modules) and deliberately avoids the
// main code paths it is used to check.

// Monomial expansion of the Schur polynomial s_nu(x_1..x_nvars): exponent
// vector -> coefficient.
std::map<std::vector<int>, Integer> schur_monomials(const Partition& nu, int nvars);

// Expand s_eta * s_rho in nvars variables and peel it into Schur terms;
// returns all Littlewood-Richardson coefficients c^mu_{eta,rho} at once.
std::map<Partition, Integer> lr_bruteforce(const Partition& eta, const Partition& rho,
                                           int nvars);

// Direct tableau evaluation of the skew Schur function at x_i = y^{2i-1}
// (y = x^{-1}) with nvars variables, as integer series coefficients of
// y^0..y^order.
std::vector<Integer> skew_principal_series_oracle(const Partition& mu, const Partition& lambda,
                                                  int nvars, int order);

// Power-series expansion of an exact rational function in ascending powers
// of y = x^{-1}; exponent -> coefficient for exponents <= order. Requires a
// pole-free substitution (denominator nonzero at y = 0 after flipping).
std::map<int, Rational> series_in_x_inverse(const QRat& f, int order);

// Full S_d character table built from permutation-module characters and
// Gram-Schmidt in the class inner product: (irrep, class) -> value.
std::map<std::pair<Partition, Partition>, Integer> character_table_bruteforce(int d);

}  // namespace vtx
