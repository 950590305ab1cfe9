#pragma once

// The elephant polynomials R_n and the families derived from them:
//   S_n(x) = (-i)^n R_n(ix)         real-rooted companion for a < 0
//   T_n     leading a^{n-1} coefficient of R_n
//   V_n     tanh^{(n)}(x) = V_n(tanh x)
// plus the closed forms that R_n takes at a = -1/2 and a = -1.

#include "elephant/ratpoly.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace elephant {

enum class Family { R, S, T, V, U, Apoly };

std::string_view family_name(Family f);
Family parse_family(std::string_view name);

/// R_n for memory parameter a, from R_1 = x and
///   R_{n+1} = x R_n - (a/n)(1 - x^2) R_n'.
/// Defined for every rational a, not only the probabilistic range.
DensePoly elephant_poly(unsigned n, const Rational& a);

/// R_1..R_max_n in one pass; element i holds R_{i+1}.
std::vector<DensePoly> elephant_sequence(unsigned max_n, const Rational& a);

/// S_n via the coefficient sign rule c_j -> (-1)^{(j-n)/2} c_j.
DensePoly imaginary_transform(unsigned n, const Rational& a);
DensePoly imaginary_transform(const DensePoly& rn, unsigned n);

/// T_1 = x, T_{n+1} = (x^2 - 1)/n * T_n'.
DensePoly limit_poly_T(unsigned n);

/// V_0 = x, V_{n+1} = (1 - x^2) V_n'.
DensePoly tanh_poly_V(unsigned n);

/// ((x-1)/2)^n + ((x+1)/2)^n, which is R_n at a = -1/2.
DensePoly closed_form_minus_half(unsigned n);

/// (2x)^{n-2}/(n-1)! * U_{n-1}(1/(4x^2)), which is R_n at a = -1. Needs n >= 2.
DensePoly closed_form_minus_one(unsigned n);

/// Coefficient of a^{n-1} in R_n(x; a), recovered by Lagrange interpolation
/// in a over the nodes 0, 1, ..., n-1.
DensePoly leading_coeff_in_a(unsigned n);

/// One row of the non-orthogonality check at a fixed a.
struct ResultantSample {
  Rational a;
  DensePoly defect;        // R_4 - (a+1) x R_3
  Rational resultant;      // Sylvester determinant of defect and R_2
  Rational expected;       // a^4 (a-1)^2 / 9
  bool orthogonal_case = false;  // resultant vanishes (a in {0, 1})
  bool matches = false;
};

struct NonOrthogonalityReport {
  std::vector<ResultantSample> samples;
  bool low_order_identity_holds = false;  // R_{n+1} = (a+1)x R_n - a R_{n-1} for n = 1, 2
  std::vector<std::string> failures;
  [[nodiscard]] bool passed() const { return failures.empty(); }
};

/// Resultant of two polynomials of formal degree 2 via the 4x4 Sylvester
/// determinant. A vanishing leading coefficient is kept in the matrix.
Rational sylvester_resultant_quadratic(const DensePoly& f, const DensePoly& g);

NonOrthogonalityReport verify_nonorthogonality(const std::vector<Rational>& a_samples);

}  // namespace elephant
