#pragma once

// R_n'(1), the second moment E[S_n^2] of the walk, by recurrence, by the
// rising-factorial closed form, and by its generating function.

#include "elephant/ratpoly.hpp"

#include <stdexcept>
#include <vector>

namespace elephant {

class SingularParameter : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

enum class MomentRegime { sub_half, half, super_half };

MomentRegime regime_of(const Rational& a);
const char* regime_name(MomentRegime r);

struct MomentRecord {
  unsigned n = 0;
  Rational a;
  Rational value;
  MomentRegime regime = MomentRegime::sub_half;
};

/// R_1'(1) = 1, R_{n+1}'(1) = 1 + R_n'(1)(1 + 2a/n).
Rational dRn1_recurrence(unsigned n, const Rational& a);

/// Values for n = 1..max_n in one pass (element i holds n = i + 1).
std::vector<Rational> dRn1_sequence(unsigned max_n, const Rational& a);

/// (n! - (2a)(2a+1)...(2a+n-1)) / ((1 - 2a)(n-1)!). Throws SingularParameter
/// at a = 1/2.
Rational dRn1_closed(unsigned n, const Rational& a);

/// The closed form exactly as printed, i.e. evaluated at index n + 1:
/// (Gamma(n+2)Gamma(2a) - Gamma(n+1+2a)) / ((1-2a)Gamma(2a)Gamma(n+1)).
/// Kept to document that it equals R_{n+1}'(1), not R_n'(1).
Rational dRn1_closed_as_printed(unsigned n, const Rational& a);

/// n H_n, the value at a = 1/2.
Rational dRn1_half(unsigned n);

/// sum_{n>=1} R_n'(1) x^n through x^order:
///   x/(1-x)^2 (1 - 2a (1-x)^{1-2a}) / (1 - 2a)   for a != 1/2
///   x/(1-x)^2 (1 - ln(1-x))                      for a  = 1/2
PowerSeries dRn1_gf_coeffs(const Rational& a, unsigned order);

/// Leading-order prediction for R_n'(1): n/(1-2a), n ln n, or
/// n^{2a}/((2a-1) Gamma(2a)).
double predicted_leading(unsigned n, const Rational& a);

/// R_n'(1) / predicted_leading(n, a). Needs n >= 2 and 0 <= a <= 1.
double asymptotic_ratio(unsigned n, const Rational& a);

/// R_n^{(order)}(1), computed from the exact polynomial.
Rational derivative_at_one(unsigned n, const Rational& a, unsigned order);

}  // namespace elephant
