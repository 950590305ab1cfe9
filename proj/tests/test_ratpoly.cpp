#include "elephant/ratpoly.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace elephant;
using testing::P;
using testing::Q;

TEST_CASE("parse_rational accepts integers, fractions and decimals exactly") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-7/21") == Rational(-1, 3));
  CHECK(parse_rational("+1/2") == Rational(1, 2));
  CHECK(parse_rational("0.1") == Rational(1, 10));
  CHECK(parse_rational("-2.50") == Rational(-5, 2));
}

TEST_CASE("parse_rational rejects malformed input") {
  for (const char* bad : {"", ".5", "7.", "1/0", "abc", "1/", "/2", "1.2.3", "1/-2", "--1", "0x10", "1e3", " 1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_rational(bad), ParseError);
  }
}

TEST_CASE("to_string is canonical") {
  CHECK(to_string(Rational(6, -4)) == "-3/2");
  CHECK(to_string(Rational(4, 2)) == "2");
  CHECK(to_string(Rational(0)) == "0");
}

TEST_CASE("DensePoly trims trailing zeros and the zero polynomial has no degree") {
  const DensePoly p = P({"1", "2", "0", "0"});
  CHECK(p.size() == 2);
  CHECK(*p.degree() == 1);
  const DensePoly z = P({"0", "0"});
  CHECK(z.is_zero());
  CHECK_FALSE(z.degree().has_value());
  CHECK(p.coeff(10) == 0);
}

TEST_CASE("eval") {
  // R_2 = (a+1)x^2 - a at a = 1/3
  const DensePoly r2 = P({"-1/3", "0", "4/3"});
  CHECK(r2.eval(1) == 1);
  CHECK(DensePoly().eval(Q("5/7")) == 0);
  // R_3 at a = 1 is 4x^3 - 3x
  const DensePoly r3 = P({"0", "-3", "0", "4"});
  CHECK(r3.eval(Q("1/2")) == -1);
  CHECK(r3.sign_at(Q("1/2")) == -1);
  CHECK(r3.eval_double(0.5) == doctest::Approx(-1.0));
}

TEST_CASE("derivative") {
  CHECK(P({"-2", "0", "3"}).derivative() == P({"0", "6"}));
  const DensePoly p = P({"1", "2", "3"});
  CHECK(p.derivative(0) == p);
  CHECK(DensePoly::monomial(1, 3).derivative(2) == P({"0", "6"}));
  CHECK(DensePoly::monomial(1, 3).derivative(4).is_zero());
}

TEST_CASE("arithmetic and division") {
  const DensePoly x = DensePoly::monomial(1, 1);
  const DensePoly p = x * x - DensePoly::constant(1);
  CHECK(p == P({"-1", "0", "1"}));
  CHECK(pow(x + DensePoly::constant(1), 3) == P({"1", "3", "3", "1"}));
  const auto [q, r] = P({"1", "0", "0", "1"}).divmod(P({"1", "1"}));
  CHECK(q == P({"1", "-1", "1"}));
  CHECK(r.is_zero());
  CHECK_THROWS_AS((void)p.divmod(DensePoly()), std::domain_error);
  CHECK(gcd(P({"-1", "0", "1"}), P({"-2", "2"})) == P({"-1", "1"}));
  CHECK(gcd(P({"1", "1"}), P({"-1", "1"})) == P({"1"}));
  CHECK(P({"2", "-4"}).monic() == P({"-1/2", "1"}));
  CHECK(P({"2", "-4"}).abs_normalized() == P({"1/2", "-1"}));
}

TEST_CASE("interpolate recovers a polynomial") {
  const DensePoly p = P({"1/2", "-3", "0", "7/5"});
  std::vector<Rational> nodes, values;
  for (int i = 0; i < 4; ++i) {
    nodes.emplace_back(i);
    values.push_back(p.eval(i));
  }
  CHECK(interpolate(nodes, values) == p);
}

TEST_CASE("to_string for polynomials") {
  CHECK(to_string(P({"-1/2", "0", "3/2"}), 'x') == "3/2*x^2 - 1/2");
  CHECK(to_string(DensePoly(), 'x') == "0");
}

TEST_CASE("cos_substitution") {
  LaurentPoly x_sub = cos_substitution(DensePoly::monomial(1, 1));
  CHECK(x_sub.coeff(1) == Rational(1, 2));
  CHECK(x_sub.coeff(-1) == Rational(1, 2));
  CHECK(x_sub.terms().size() == 2);

  // R_2 at a = -1/2 is (x^2 + 1)/2
  const LaurentPoly r2 = cos_substitution(P({"1/2", "0", "1/2"}));
  CHECK(r2.coeff(2) == Rational(1, 8));
  CHECK(r2.coeff(0) == Rational(3, 4));
  CHECK(r2.coeff(-2) == Rational(1, 8));
  CHECK(r2.is_symmetric());
  CHECK(r2.coeff_sum() == 1);

  const LaurentPoly sq = cos_substitution(DensePoly::monomial(1, 2));
  CHECK(sq.coeff(2) == Rational(1, 4));
  CHECK(sq.coeff(0) == Rational(1, 2));
  CHECK(sq.coeff(-2) == Rational(1, 4));
  CHECK(x_sub * x_sub == sq);
}

TEST_CASE("series_expand") {
  CHECK(series_expand(SeriesKind::rational_x_over_1mx_sq, 0, 4) == PowerSeries({0, 1, 2, 3, 4}));
  CHECK(series_expand(SeriesKind::log_one_minus, 0, 3) ==
        PowerSeries({Rational(0), Rational(-1), Rational(-1, 2), Rational(-1, 3)}));
  // alpha = 1 - 2a at a = 3/2
  CHECK(series_expand(SeriesKind::binomial_alpha, Rational(1) - 2 * Q("3/2"), 3) == PowerSeries({1, 2, 3, 4}));
  CHECK(series_expand(SeriesKind::binomial_alpha, Rational(1, 2), 2) ==
        PowerSeries({Rational(1), Rational(-1, 2), Rational(-1, 8)}));
}

TEST_CASE("series_mul") {
  CHECK(series_mul(PowerSeries({1, 1}), PowerSeries({1, 1})) == PowerSeries({1, 2}));
  const PowerSeries f({Rational(3), Rational(-1, 2), Rational(5)});
  CHECK(series_mul(f, PowerSeries({1, 0, 0})) == f);
  const PowerSeries g = series_mul(series_expand(SeriesKind::rational_x_over_1mx_sq, 0, 4),
                                   Rational(-1) * series_expand(SeriesKind::log_one_minus, 0, 4));
  CHECK(g[2] == 1);
  CHECK(series_mul(f, PowerSeries({1, 1, 1, 1, 1})).order() == 2);
}
