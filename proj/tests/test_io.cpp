#include "elephant/families.hpp"
#include "elephant/io.hpp"

#include "support.hpp"

#include <doctest.h>

#include <sstream>

using namespace elephant;
using testing::P;
using testing::Q;

TEST_CASE("polynomial JSON round trip") {
  const DensePoly p = P({"-1/2", "0", "3/2"});
  const auto j = io::to_json(p);
  CHECK(j == nlohmann::json::array({"-1/2", "0", "3/2"}));
  CHECK(io::poly_from_json(j) == p);
  CHECK(io::poly_from_json(io::to_json(DensePoly())).is_zero());
  CHECK_THROWS(io::poly_from_json(nlohmann::json::array({"1/0"})));
}

TEST_CASE("series and Laurent round trips") {
  const PowerSeries s({Rational(1), Rational(-1, 2), Rational(0), Rational(7)});
  CHECK(io::series_from_json(io::to_json(s)) == s);
  const LaurentPoly l = cos_substitution(P({"1/2", "0", "1/2"}));
  CHECK(io::laurent_from_json(io::to_json(l)) == l);
}

TEST_CASE("family record") {
  const auto j = io::family_record(Family::R, 2, Q("1/2"), elephant_poly(2, Q("1/2")));
  CHECK(j["family"] == "R");
  CHECK(j["n"] == 2);
  CHECK(j["a"] == "1/2");
  CHECK(j["coeffs"] == nlohmann::json::array({"-1/2", "0", "3/2"}));
  const auto v = io::family_record(Family::V, 2, std::nullopt, tanh_poly_V(2));
  CHECK(v["a"].is_null());
}

TEST_CASE("distribution JSON round trip and CSV") {
  const auto table = exact_distribution_dp(4, ErwParams(-1));
  const auto j = io::distribution_to_json(table);
  CHECK(j["n"] == 4);
  CHECK(j["rows"].size() == 3);  // zero-probability rows are omitted
  CHECK(j["rows"][1]["k"] == 0);
  CHECK(j["rows"][1]["prob_num"] == "2");
  CHECK(j["rows"][1]["prob_den"] == "3");
  CHECK(io::distribution_from_json(j) == table);

  std::ostringstream csv;
  io::write_distribution_csv(csv, table);
  CHECK(csv.str().rfind("k,prob_num,prob_den,prob_float\n", 0) == 0);
  CHECK(csv.str().find("0,2,3,") != std::string::npos);
}

TEST_CASE("moments CSV") {
  std::ostringstream out;
  io::write_moments_csv_header(out);
  io::write_moments_csv_row(out, MomentRecord{1, Rational(0), Rational(1), regime_of(0)});
  io::write_moments_csv_row(out, MomentRecord{3, Rational(1, 2), Rational(11, 2), regime_of(Q("1/2"))});
  std::istringstream in(out.str());
  std::string header, first, second;
  std::getline(in, header);
  std::getline(in, first);
  std::getline(in, second);
  CHECK(header == "n,a,value_num,value_den,value_float,predicted_leading,ratio");
  CHECK(first == "1,0,1,1,1,,");
  CHECK(second.rfind("3,1/2,11,2,5.5,", 0) == 0);
}

TEST_CASE("root report") {
  const auto roots = isolate_roots(elephant_poly(3, Q("1/2")), RootDomain::open(-1, 1));
  const auto j = io::root_report(3, Q("1/2"), roots, true);
  CHECK(j["n"] == 3);
  CHECK(j["roots"].size() == 3);
  CHECK(j["interlaced_with_next"] == true);
  CHECK(io::root_report(3, Q("1/2"), roots, std::nullopt)["interlaced_with_next"].is_null());
}

TEST_CASE("format_double is shortest round trip") {
  CHECK(io::format_double(0.5) == "0.5");
  CHECK(io::format_double(0.1) == "0.1");
  CHECK(io::format_double(1e-20) == "1e-20");
}
