#include "elephant/moments.hpp"

#include "elephant/families.hpp"

#include <cmath>

namespace elephant {

MomentRegime regime_of(const Rational& a) {
  const Rational half(1, 2);
  if (a < half) return MomentRegime::sub_half;
  if (a == half) return MomentRegime::half;
  return MomentRegime::super_half;
}

const char* regime_name(MomentRegime r) {
  switch (r) {
    case MomentRegime::sub_half: return "sub_half";
    case MomentRegime::half: return "half";
    case MomentRegime::super_half: return "super_half";
  }
  return "?";
}

std::vector<Rational> dRn1_sequence(unsigned max_n, const Rational& a) {
  std::vector<Rational> out;
  out.reserve(max_n);
  if (max_n == 0) return out;
  out.emplace_back(1);
  for (unsigned n = 1; n < max_n; ++n) {
    out.emplace_back(1 + out.back() * (1 + 2 * a / n));
  }
  return out;
}

Rational dRn1_recurrence(unsigned n, const Rational& a) {
  if (n < 1) throw std::out_of_range("R_n'(1) needs n >= 1");
  return dRn1_sequence(n, a).back();
}

namespace {

// Gamma(m + x) / Gamma(x) = x (x+1) ... (x+m-1)
Rational rising_factorial(const Rational& x, unsigned m) {
  Rational r = 1;
  for (unsigned j = 0; j < m; ++j) r *= x + j;
  return r;
}

Rational closed_at(unsigned n, const Rational& a) {
  const Rational one_minus_2a = 1 - 2 * a;
  if (one_minus_2a == 0) throw SingularParameter("closed form is singular at a = 1/2; use dRn1_half");
  const Rational two_a = 2 * a;
  return (Rational(factorial(n)) - rising_factorial(two_a, n)) /
         (one_minus_2a * Rational(factorial(n - 1)));
}

}  // namespace

Rational dRn1_closed(unsigned n, const Rational& a) {
  if (n < 1) throw std::out_of_range("R_n'(1) needs n >= 1");
  return closed_at(n, a);
}

Rational dRn1_closed_as_printed(unsigned n, const Rational& a) {
  if (n < 1) throw std::out_of_range("R_n'(1) needs n >= 1");
  return closed_at(n + 1, a);
}

Rational dRn1_half(unsigned n) {
  if (n < 1) throw std::out_of_range("R_n'(1) needs n >= 1");
  Rational harmonic = 0;
  for (unsigned k = 1; k <= n; ++k) harmonic += Rational(1, k);
  return n * harmonic;
}

PowerSeries dRn1_gf_coeffs(const Rational& a, unsigned order) {
  if (order < 1) throw std::invalid_argument("generating function needs order >= 1");
  const PowerSeries base = series_expand(SeriesKind::rational_x_over_1mx_sq, 0, order);
  PowerSeries one(order);
  one[0] = 1;

  const Rational one_minus_2a = 1 - 2 * a;
  if (one_minus_2a == 0) {
    const PowerSeries log_term = series_expand(SeriesKind::log_one_minus, 0, order);
    return series_mul(base, one - log_term);
  }
  const PowerSeries power = series_expand(SeriesKind::binomial_alpha, one_minus_2a, order);
  const PowerSeries numerator = one - Rational(2 * a) * power;
  return Rational(1 / one_minus_2a) * series_mul(base, numerator);
}

double predicted_leading(unsigned n, const Rational& a) {
  const double nd = n;
  const double ad = a.get_d();
  switch (regime_of(a)) {
    case MomentRegime::sub_half: return nd / (1.0 - 2.0 * ad);
    case MomentRegime::half: return nd * std::log(nd);
    case MomentRegime::super_half:
      return std::pow(nd, 2.0 * ad) / ((2.0 * ad - 1.0) * std::tgamma(2.0 * ad));
  }
  return 0.0;
}

double asymptotic_ratio(unsigned n, const Rational& a) {
  if (n < 2) throw std::out_of_range("asymptotic ratio needs n >= 2");
  if (a < 0 || a > 1) throw std::domain_error("asymptotic ratio needs 0 <= a <= 1");
  return dRn1_recurrence(n, a).get_d() / predicted_leading(n, a);
}

Rational derivative_at_one(unsigned n, const Rational& a, unsigned order) {
  return elephant_poly(n, a).derivative(order).eval(1);
}

}  // namespace elephant
