#include "elephant/families.hpp"
#include "elephant/oracles.hpp"
#include "elephant/roots.hpp"

#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace elephant;
using testing::P;
using testing::Q;

namespace {

// Every interval brackets a sign change and is no wider than requested.
void check_certified(const RootList& roots, const Rational& width) {
  for (const auto& iv : roots.intervals) {
    CHECK(iv.lo < iv.hi);
    CHECK(iv.width() <= width);
    CHECK(roots.poly.sign_at(iv.lo) == iv.sign_lo);
    CHECK(roots.poly.sign_at(iv.hi) == iv.sign_hi);
    CHECK(iv.sign_lo * iv.sign_hi == -1);
  }
  for (const auto& r : roots.exact_roots) CHECK(roots.poly.eval(r) == 0);
}

}  // namespace

TEST_CASE("sturm_sequence") {
  const auto chain = sturm_sequence(P({"-1", "0", "1"}));
  REQUIRE(chain.size() == 3);
  CHECK(chain[0] == P({"-1", "0", "1"}));
  CHECK(chain[1] == P({"0", "2"}));
  CHECK(chain[2] == P({"1"}));

  const auto linear = sturm_sequence(P({"0", "1"}));
  REQUIRE(linear.size() == 2);
  CHECK(linear[1] == P({"1"}));
}

TEST_CASE("count_roots over open intervals and the whole line") {
  const auto chain = sturm_sequence(P({"-1", "0", "1"}));
  CHECK(count_roots(chain, RootDomain::whole_line()) == 2);
  CHECK(count_roots(chain, RootDomain::open(-1, 1)) == 0);
  CHECK(count_roots(chain, RootDomain::open(Q("-1/2"), 2)) == 1);
  CHECK(count_roots(chain, RootDomain::open(-2, 1)) == 1);
  const auto cubic = sturm_sequence(oracle::chebyshev_T(3));
  CHECK(count_roots(cubic, RootDomain::open(-1, 1)) == 3);
}

TEST_CASE("isolate_roots of R_2 at a = 1") {
  const RootList roots = isolate_roots(P({"-1", "0", "2"}), RootDomain::open(-1, 1));
  REQUIRE(roots.count() == 2);
  REQUIRE(roots.intervals.size() == 2);
  check_certified(roots, default_isolation_width());
  // (lo, hi) brackets +-1/sqrt 2: compare squares on each side
  const auto& pos = roots.intervals[1];
  CHECK(pos.lo * pos.lo < Rational(1, 2));
  CHECK(pos.hi * pos.hi > Rational(1, 2));
  CHECK(pos.mid_float() == doctest::Approx(std::numbers::sqrt2 / 2).epsilon(1e-9));
}

TEST_CASE("isolate_roots reports a root hit by bisection exactly") {
  const RootList roots = isolate_roots(elephant_poly(3, Q("1/2")), RootDomain::open(-1, 1));
  REQUIRE(roots.count() == 3);
  REQUIRE(roots.exact_roots.size() == 1);
  CHECK(roots.exact_roots[0] == 0);
  check_certified(roots, default_isolation_width());
  CHECK(roots.intervals.back().mid_float() == doctest::Approx(std::sqrt(5.0) / 3).epsilon(1e-9));
}

TEST_CASE("isolate_roots on constants and with a coarse width") {
  const RootList none = isolate_roots(imaginary_transform(2, -1), RootDomain::whole_line());
  CHECK(none.count() == 0);
  const Rational coarse(1, 8);
  const RootList roots = isolate_roots(oracle::chebyshev_T(7), RootDomain::whole_line(), coarse);
  CHECK(roots.count() == 7);
  check_certified(roots, coarse);
  CHECK_THROWS_AS(isolate_roots(DensePoly(), RootDomain::whole_line()), std::domain_error);
}

TEST_CASE("isolate_roots refuses a repeated root") {
  CHECK_THROWS_AS(isolate_roots(elephant_poly(3, 0), RootDomain::open(-1, 1)), NonSquarefree);
  try {
    (void)isolate_roots(P({"1", "-2", "1"}), RootDomain::whole_line());
  } catch (const NonSquarefree& e) {
    CHECK(e.common_factor() == P({"-1", "1"}));
  }
}

TEST_CASE("check_interlacing") {
  const RootDomain unit = RootDomain::open(-1, 1);
  const auto r1 = isolate_roots(elephant_poly(1, Q("1/2")), unit);
  const auto r2 = isolate_roots(elephant_poly(2, Q("1/2")), unit);
  const auto rep = check_interlacing(r1, r2, InterlaceMode::strict_open_interval);
  CHECK(rep.interlaced);
  CHECK_FALSE(rep.vacuous);
  CHECK(rep.order.size() == 3);

  const auto t5 = isolate_roots(oracle::chebyshev_T(5), unit, Rational(1, 4));
  const auto t6 = isolate_roots(oracle::chebyshev_T(6), unit, Rational(1, 4));
  CHECK(check_interlacing(t5, t6, InterlaceMode::strict_open_interval).interlaced);

  // T_4 and T_6 differ in count by two
  const auto t4 = isolate_roots(oracle::chebyshev_T(4), unit);
  CHECK_THROWS_AS(check_interlacing(t4, t6, InterlaceMode::strict_open_interval), InterlacingViolated);

  // x^2 - 1/4 and x^3 - x/4 share the roots +-1/2
  const auto a = isolate_roots(P({"-1/4", "0", "1"}), RootDomain::whole_line());
  const auto b = isolate_roots(P({"0", "-1/4", "0", "1"}), RootDomain::whole_line());
  CHECK_THROWS_AS(check_interlacing(a, b, InterlaceMode::whole_line), InterlacingViolated);
}

TEST_CASE("S_n at a = -1 has |n-2| real roots and degenerate steps are vacuous") {
  std::vector<RootList> lists;
  for (unsigned n = 1; n <= 6; ++n) lists.push_back(isolate_roots(imaginary_transform(n, -1), RootDomain::whole_line()));
  const std::vector<std::size_t> counts{1, 0, 1, 2, 3, 4};
  for (unsigned n = 1; n <= 6; ++n) CHECK(lists[n - 1].count() == counts[n - 1]);
  const auto first = check_interlacing(lists[0], lists[1], InterlaceMode::whole_line);
  CHECK(first.interlaced);
  CHECK(first.vacuous);
  for (unsigned n = 3; n < 6; ++n) {
    const auto rep = check_interlacing(lists[n - 1], lists[n], InterlaceMode::whole_line);
    CHECK(rep.interlaced);
    CHECK_FALSE(rep.vacuous);
  }
}

TEST_CASE("S_n below a = -1 is not real-rooted") {
  // S_2 = (a+1)x^2 + a has no real root once a < -1.
  const Rational a = Q("-3/2");
  CHECK(isolate_roots(imaginary_transform(2, a), RootDomain::whole_line()).count() == 0);
  const auto s5 = isolate_roots(imaginary_transform(5, a), RootDomain::whole_line());
  const auto s6 = isolate_roots(imaginary_transform(6, a), RootDomain::whole_line());
  CHECK(s5.count() == 1);
  CHECK(s6.count() == 4);
  CHECK_THROWS_AS(check_interlacing(s5, s6, InterlaceMode::whole_line), InterlacingViolated);
}

TEST_CASE("strict mode rejects roots outside (-1, 1)") {
  const auto inside = isolate_roots(P({"0", "1"}), RootDomain::whole_line());
  const auto outside = isolate_roots(P({"-4", "0", "1"}), RootDomain::whole_line());
  CHECK_THROWS_AS(check_interlacing(inside, outside, InterlaceMode::strict_open_interval), InterlacingViolated);
  CHECK(check_interlacing(inside, outside, InterlaceMode::whole_line).interlaced);
}

TEST_CASE("cauchy_bound contains every root") {
  const DensePoly p = P({"-6", "11", "-6", "1"});  // roots 1, 2, 3
  CHECK(cauchy_bound(p) > 3);
  CHECK(count_roots(sturm_sequence(p), RootDomain::open(-cauchy_bound(p), cauchy_bound(p))) == 3);
}
