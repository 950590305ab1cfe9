#include "elephant/combinatorics.hpp"
#include "elephant/oracles.hpp"

#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace elephant;
using testing::P;
using testing::Q;

TEST_CASE("Eulerian numbers") {
  CHECK(eulerian(3, 2) == 4);
  for (unsigned n = 1; n <= 12; ++n) CHECK(eulerian(n, 1) == 1);
  CHECK(eulerian(5, 3) == 66);
  CHECK_THROWS_AS(eulerian(3, 0), std::out_of_range);
  CHECK_THROWS_AS(eulerian(3, 4), std::out_of_range);
  CHECK_THROWS_AS(eulerian(0, 1), std::out_of_range);
  for (unsigned n = 1; n <= 8; ++n) CHECK(EulerianTable(8).row(n) == oracle::eulerian_row_by_permutations(n));
}

TEST_CASE("Eulerian rows match the golden table") {
  const auto g = testing::golden("eulerian_rows.json");
  const EulerianTable table(10);
  for (const auto& [n_text, row] : g.items()) {
    std::vector<Integer> expected;
    for (const auto& v : row) expected.emplace_back(v.get<std::string>());
    CHECK(table.row(std::stoul(n_text)) == expected);
  }
}

TEST_CASE("central_eulerian_altsum") {
  CHECK(central_eulerian_altsum(1) == 1);
  CHECK(central_eulerian_altsum(2) == 4);
  CHECK(central_eulerian_altsum(3) == 66);
  for (unsigned n = 1; n <= 6; ++n) CHECK(central_eulerian_altsum(n) == eulerian(2 * n - 1, n));
}

TEST_CASE("triangle T(n, k)") {
  const TriangleT table(7);
  CHECK(table.row(5) == std::vector<Integer>{1, 22, 16});
  CHECK(table.row(7) == std::vector<Integer>{1, 114, 720, 272});
  for (unsigned n = 1; n <= 20; ++n) CHECK(triangle_T(n, 0) == 1);
  CHECK(triangle_T(5, 3) == 0);
  CHECK(triangle_T(5, -1) == 0);
}

TEST_CASE("U_n polynomials") {
  CHECK(u_poly(1) == P({"1"}));
  CHECK(u_poly(3) == P({"1", "2"}));
  CHECK(u_poly(6) == P({"1", "52", "136"}));
  for (unsigned n = 1; n <= 20; ++n) CHECK(u_poly(n) == u_poly_by_recurrence(n));
}

TEST_CASE("Eulerian polynomials and the U/A identity") {
  CHECK(eulerian_poly(1) == P({"1"}));
  CHECK(eulerian_poly(3) == P({"1", "4", "1"}));
  CHECK(eulerian_poly(5) == P({"1", "26", "66", "26", "1"}));
  CHECK(u_to_eulerian_lhs(1) == P({"1"}));
  CHECK(u_to_eulerian_lhs(2) == P({"1", "4", "1"}));
  for (unsigned n = 1; n <= 8; ++n) CHECK(verify_U_A_identity(n));
}

TEST_CASE("U_n generating function residual") {
  const double r30 = verify_U_gf(Q("1/8"), 0.5, 30);
  CHECK(r30 < 1e-9);
  double previous = 1.0;
  for (unsigned terms : {5U, 10U, 20U, 30U}) {
    const double r = verify_U_gf(Q("1/8"), 0.5, terms);
    CHECK(r < previous);
    previous = r;
  }
  CHECK(verify_U_gf(Q("1/1000"), 0.5, 30) < 1e-9);
  CHECK(verify_U_gf(Q("1/8"), 0.0, 30) == 0.0);
  CHECK(verify_U_gf(0, 0.5, 30) < 1e-12);
  CHECK_THROWS_AS(verify_U_gf(Q("1/4"), 0.5, 30), DomainError);
  CHECK_THROWS_AS(verify_U_gf(Q("-1/3"), 0.5, 30), DomainError);
}

TEST_CASE("b-file output") {
  std::ostringstream t;
  write_bfile_triangle_T(t, 4);
  CHECK(t.str() == "1 1\n2 1\n3 1\n4 2\n5 1\n6 8\n");
  std::ostringstream e;
  write_bfile_eulerian(e, 3);
  CHECK(e.str() == "1 1\n2 1\n3 1\n4 1\n5 4\n6 1\n");
  std::ostringstream c;
  write_bfile_central_eulerian(c, 3);
  CHECK(c.str() == "1 1\n2 4\n3 66\n");
  std::ostringstream none;
  write_bfile_central_eulerian(none, 0);
  CHECK(none.str().empty());
}
