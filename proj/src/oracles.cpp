#include "elephant/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace elephant::oracle {

DensePoly chebyshev_T(unsigned n) {
  const DensePoly x = DensePoly::monomial(1, 1);
  DensePoly prev = DensePoly::constant(1);
  if (n == 0) return prev;
  DensePoly cur = x;
  for (unsigned m = 1; m < n; ++m) {
    DensePoly next = DensePoly::monomial(2, 1) * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

DensePoly s_by_recurrence(unsigned n, const Rational& a) {
  if (n < 1) throw std::out_of_range("S_n needs n >= 1");
  const DensePoly x = DensePoly::monomial(1, 1);
  const DensePoly one_plus_x_sq({1, 0, 1});
  DensePoly s = x;
  for (unsigned m = 1; m < n; ++m) s = x * s + Rational(a / m) * (one_plus_x_sq * s.derivative());
  return s;
}

std::vector<Integer> eulerian_row_by_permutations(unsigned n) {
  if (n < 1 || n > 10) throw std::out_of_range("permutation oracle runs for 1 <= n <= 10");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Integer> row(n, 0);
  do {
    unsigned descents = 0;
    for (unsigned i = 0; i + 1 < n; ++i) descents += perm[i] > perm[i + 1] ? 1 : 0;
    ++row[descents];
  } while (std::next_permutation(perm.begin(), perm.end()));
  return row;
}

}  // namespace elephant::oracle
