#pragma once

// Reference constructions that share no code path with the production
// routines they check. Kept deliberately naive.

#include "elephant/ratpoly.hpp"

#include <vector>

namespace elephant::oracle {

/// Chebyshev T_n from T_0 = 1, T_1 = x, T_{n+1} = 2x T_n - T_{n-1}.
DensePoly chebyshev_T(unsigned n);

/// S_n from S_1 = x, S_{n+1} = x S_n + (a/n)(1 + x^2) S_n'.
DensePoly s_by_recurrence(unsigned n, const Rational& a);

/// Row n of the Eulerian triangle by counting descents over all n!
/// permutations: entry k-1 is the number with k-1 descents.
std::vector<Integer> eulerian_row_by_permutations(unsigned n);

}  // namespace elephant::oracle
