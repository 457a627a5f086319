#pragma once

#include <vector>

#include "vtx/rational.hpp"

namespace vtx {

// Descendant integral <tau_{k_1} ... tau_{k_n}>_g on the moduli of stable
// curves, with the genus read off from sum k_i = 3g - 3 + n. Returns 0 when
// no nonnegative genus satisfies the dimension constraint. Computed by the
// Virasoro/DVV recursion with string and dilaton reductions; multiset
// semantics, memoized.
Rational psi_integral(const std::vector<int>& k);

}  // namespace vtx
