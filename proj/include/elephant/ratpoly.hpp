#pragma once

// Exact rational scalars, dense univariate polynomials, truncated power
// series and Laurent polynomials. Everything else in the library is built on
// these four types.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace elephant {

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator (GMP canonical form).
using Rational = mpq_class;
using Integer = mpz_class;

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p", "p/q" or a finite decimal "d.ddd" (with optional sign) into an
/// exact rational. Anything else, including a zero denominator, throws
/// ParseError.
Rational parse_rational(std::string_view text);

/// Canonical "num/den" text; integers print without a denominator.
std::string to_string(const Rational& value);

Rational canonical(Rational value);
int sign(const Rational& value);
Rational pow(const Rational& base, unsigned exponent);
Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

// ---------------------------------------------------------------------------

/// Dense polynomial in one variable over the rationals, lowest degree first.
/// The coefficient vector never carries trailing zeros, so the zero polynomial
/// is the empty vector and has no degree.
class DensePoly {
 public:
  DensePoly() = default;
  explicit DensePoly(std::vector<Rational> coeffs);
  DensePoly(std::initializer_list<Rational> coeffs);

  static DensePoly constant(const Rational& c);
  static DensePoly monomial(const Rational& c, std::size_t power);

  [[nodiscard]] bool is_zero() const { return coeffs_.empty(); }
  [[nodiscard]] std::optional<std::size_t> degree() const;
  /// Coefficient of x^power; zero beyond the stored range.
  [[nodiscard]] Rational coeff(std::size_t power) const;
  [[nodiscard]] const Rational& leading() const;
  [[nodiscard]] std::span<const Rational> coeffs() const { return coeffs_; }
  [[nodiscard]] std::size_t size() const { return coeffs_.size(); }

  [[nodiscard]] Rational eval(const Rational& x) const;
  [[nodiscard]] int sign_at(const Rational& x) const;
  [[nodiscard]] double eval_double(double x) const;

  [[nodiscard]] DensePoly derivative(unsigned order = 1) const;
  [[nodiscard]] DensePoly monic() const;
  /// Divides by |leading coefficient|; keeps every sign, unlike monic().
  [[nodiscard]] DensePoly abs_normalized() const;

  DensePoly& operator+=(const DensePoly& other);
  DensePoly& operator-=(const DensePoly& other);
  DensePoly& operator*=(const Rational& scalar);

  friend DensePoly operator+(DensePoly lhs, const DensePoly& rhs) { return lhs += rhs; }
  friend DensePoly operator-(DensePoly lhs, const DensePoly& rhs) { return lhs -= rhs; }
  friend DensePoly operator-(const DensePoly& p);
  friend DensePoly operator*(const DensePoly& lhs, const DensePoly& rhs);
  friend DensePoly operator*(DensePoly p, const Rational& s) { return p *= s; }
  friend DensePoly operator*(const Rational& s, DensePoly p) { return p *= s; }
  friend bool operator==(const DensePoly& lhs, const DensePoly& rhs) = default;

  /// Euclidean division; throws std::domain_error on a zero divisor.
  struct DivResult;
  [[nodiscard]] DivResult divmod(const DensePoly& divisor) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct DensePoly::DivResult {
  DensePoly quotient;
  DensePoly remainder;
};

DensePoly pow(const DensePoly& base, unsigned exponent);
/// Monic gcd; gcd(0, 0) is the zero polynomial.
DensePoly gcd(DensePoly lhs, DensePoly rhs);
/// Unique polynomial of degree < nodes.size() through (nodes[i], values[i]).
DensePoly interpolate(std::span<const Rational> nodes, std::span<const Rational> values);

std::string to_string(const DensePoly& p, char var = 'x');

// ---------------------------------------------------------------------------

/// Finite sum of c_k z^k over integer k; zero entries are never stored.
class LaurentPoly {
 public:
  LaurentPoly() = default;

  void add(int exponent, const Rational& c);
  [[nodiscard]] Rational coeff(int exponent) const;
  [[nodiscard]] const std::map<int, Rational>& terms() const { return terms_; }
  [[nodiscard]] bool is_symmetric() const;
  [[nodiscard]] Rational coeff_sum() const;

  friend LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs);
  friend bool operator==(const LaurentPoly& lhs, const LaurentPoly& rhs) = default;

 private:
  std::map<int, Rational> terms_;
};

/// p((z + 1/z) / 2) expanded exactly. For p(cos t) this yields the Fourier
/// coefficients in e^{ikt}.
LaurentPoly cos_substitution(const DensePoly& p);

// ---------------------------------------------------------------------------

/// Power series known through x^order.
class PowerSeries {
 public:
  explicit PowerSeries(unsigned order);
  PowerSeries(std::vector<Rational> coeffs);

  [[nodiscard]] unsigned order() const { return static_cast<unsigned>(coeffs_.size() - 1); }
  [[nodiscard]] const Rational& operator[](std::size_t k) const { return coeffs_.at(k); }
  [[nodiscard]] Rational& operator[](std::size_t k) { return coeffs_.at(k); }
  [[nodiscard]] std::span<const Rational> coeffs() const { return coeffs_; }
  [[nodiscard]] PowerSeries truncated(unsigned order) const;

  friend PowerSeries operator+(const PowerSeries& lhs, const PowerSeries& rhs);
  friend PowerSeries operator-(const PowerSeries& lhs, const PowerSeries& rhs);
  friend PowerSeries operator*(const Rational& s, PowerSeries f);
  friend bool operator==(const PowerSeries& lhs, const PowerSeries& rhs) = default;

 private:
  std::vector<Rational> coeffs_;
};

enum class SeriesKind {
  binomial_alpha,          // (1 - x)^alpha
  log_one_minus,           // ln(1 - x)
  rational_x_over_1mx_sq,  // x / (1 - x)^2
};

PowerSeries series_expand(SeriesKind kind, const Rational& alpha, unsigned order);
/// Cauchy product, truncated to the smaller of the two orders.
PowerSeries series_mul(const PowerSeries& f, const PowerSeries& g);

}  // namespace elephant
