#include "elephant/verify.hpp"

#include "elephant/combinatorics.hpp"
#include "elephant/families.hpp"
#include "elephant/moments.hpp"
#include "elephant/oracles.hpp"
#include "elephant/roots.hpp"
#include "elephant/walk.hpp"

#include <cmath>
#include <future>
#include <numbers>
#include <optional>
#include <stdexcept>

namespace elephant::verify {

using nlohmann::json;

void SuiteReport::expect(bool ok, const std::string& what) {
  ++checks;
  if (!ok) failures.push_back(what);
}

json SuiteReport::to_json() const {
  return json{{"suite", name},
              {"passed", passed()},
              {"checks", checks},
              {"failures", failures},
              {"notes", notes},
              {"details", details}};
}

namespace {

std::string at(unsigned n, const Rational& a) {
  return "n=" + std::to_string(n) + " a=" + to_string(a);
}

std::vector<Rational> rationals(std::initializer_list<const char*> texts) {
  std::vector<Rational> out;
  for (const char* t : texts) out.push_back(parse_rational(t));
  return out;
}

// Merge a per-parameter report computed on a worker into the suite report.
void absorb(SuiteReport& into, SuiteReport&& part) {
  into.checks += part.checks;
  for (auto& f : part.failures) into.failures.push_back(std::move(f));
  for (auto& n : part.notes) into.notes.push_back(std::move(n));
  for (auto& [k, v] : part.details.items()) into.details[k] = std::move(v);
}

template <typename Fn>
void fan_out(SuiteReport& report, const std::vector<Rational>& grid, Fn fn) {
  std::vector<std::future<SuiteReport>> jobs;
  jobs.reserve(grid.size());
  for (const auto& a : grid) jobs.push_back(std::async(std::launch::async, fn, a));
  for (auto& j : jobs) absorb(report, j.get());
}

}  // namespace

// --- structural properties of R_n -----------------------------------------------

SuiteReport lemma21(unsigned max_n) {
  SuiteReport report;
  report.name = "lemma21";
  const auto grid = rationals({"-1", "-1/2", "-1/4", "0", "1/4", "1/2", "1", "2", "10"});

  for (const auto& a : grid) {
    const auto seq = elephant_sequence(max_n, a);
    for (unsigned n = 1; n <= max_n; ++n) {
      const DensePoly& r = seq[n - 1];
      const auto deg = r.degree();
      if (a != -1 || n == 1) {
        report.expect(deg && *deg == n, "degree != n at " + at(n, a));
        report.expect(!r.is_zero() && r.leading() == pow(Rational(a + 1), n - 1),
                      "leading coefficient != (a+1)^(n-1) at " + at(n, a));
      } else {
        const Rational lead = Rational(Integer(1) << (n - 2)) / Rational(factorial(n - 1));
        report.expect(deg && *deg == n - 2, "degree != n-2 at " + at(n, a));
        report.expect(!r.is_zero() && r.leading() == lead,
                      "leading coefficient != 2^(n-2)/(n-1)! at " + at(n, a));
      }
      bool parity = true;
      for (std::size_t j = 0; j < r.size(); ++j)
        if ((j + n) % 2 == 1 && r.coeffs()[j] != 0) parity = false;
      report.expect(parity, "parity violated at " + at(n, a));
      report.expect(r.eval(1) == 1, "R_n(1) != 1 at " + at(n, a));
      report.expect(r.eval(-1) == (n % 2 == 0 ? 1 : -1), "R_n(-1) != (-1)^n at " + at(n, a));

      if (a > 0) {
        bool alternating = true;
        int expected = 1;
        for (std::size_t j = r.size(); j-- > 0;) {
          const int s = sign(r.coeffs()[j]);
          if (s == 0) continue;
          if (s != expected) alternating = false;
          expected = -expected;
        }
        report.expect(alternating, "coefficient signs do not alternate at " + at(n, a));
      } else if (a >= -1) {
        bool nonneg = true;
        for (const auto& c : r.coeffs())
          if (c < 0) nonneg = false;
        report.expect(nonneg, "negative coefficient at " + at(n, a));
      }

      if (a >= -1 && a <= 1) {
        bool bounded = true;
        for (int i = 0; i < 64; ++i) {
          const Rational x = Rational(-1) + canonical(Rational(2 * i, 63));
          if (abs(r.eval(x)) > 1) bounded = false;
        }
        report.expect(bounded, "|R_n(x)| > 1 on [-1, 1] at " + at(n, a));
      }

      report.expect(imaginary_transform(r, n) == oracle::s_by_recurrence(n, a),
                    "S_n sign rule disagrees with the S recurrence at " + at(n, a));
    }
  }
  return report;
}

// --- interlacing ----------------------------------------------------------------

namespace {

SuiteReport interlacing_for(const Rational& a, unsigned max_n, bool imaginary) {
  SuiteReport part;
  const std::string family = imaginary ? "S" : "R";
  // Real-rootedness and interlacing are asserted for a > 0 (R) and -1 <= a < 0 (S).
  // Below -1 the S claim is refuted instead: S_2 = (a+1)x^2 + a has no real root.
  const bool claimed = !imaginary || a >= -1;
  const auto r_seq = elephant_sequence(max_n + 1, a);
  const RootDomain domain = imaginary ? RootDomain::whole_line() : RootDomain::open(-1, 1);
  const InterlaceMode mode = imaginary ? InterlaceMode::whole_line : InterlaceMode::strict_open_interval;

  std::vector<std::optional<RootList>> lists;
  json counts = json::array();
  for (unsigned n = 1; n <= max_n + 1; ++n) {
    const DensePoly p = imaginary ? imaginary_transform(r_seq[n - 1], n) : r_seq[n - 1];
    try {
      lists.emplace_back(isolate_roots(p, domain));
    } catch (const NonSquarefree& e) {
      lists.emplace_back(std::nullopt);
      counts.push_back(nullptr);
      if (claimed) part.expect(false, family + "_n not squarefree at " + at(n, a) + ": " + e.what());
      continue;
    }
    const RootList& roots = *lists.back();
    counts.push_back(roots.count());
    if (!claimed) continue;

    unsigned expected = n;
    if (imaginary && a == -1) expected = n >= 2 ? n - 2 : 1;
    part.expect(roots.count() == expected, family + "_n root count " + std::to_string(roots.count()) +
                                               " != " + std::to_string(expected) + " at " + at(n, a));
    const int whole = count_roots(sturm_sequence(p), RootDomain::whole_line());
    part.expect(whole == static_cast<int>(roots.count()),
                family + "_n has real roots outside the search domain at " + at(n, a));
  }

  json steps = json::array();
  for (unsigned n = 1; n <= max_n; ++n) {
    if (!lists[n - 1] || !lists[n]) {
      steps.push_back(nullptr);
      continue;
    }
    try {
      const auto rep = check_interlacing(*lists[n - 1], *lists[n], mode);
      if (claimed) {
        part.expect(rep.interlaced, family + "_n / " + family + "_{n+1} not interlaced at " + at(n, a));
        if (rep.vacuous) part.notes.push_back(family + " at " + at(n, a) + ": " + rep.note);
      }
      steps.push_back(rep.interlaced);
    } catch (const std::exception& e) {
      if (claimed) part.expect(false, family + "_n / " + family + "_{n+1} at " + at(n, a) + ": " + e.what());
      steps.push_back(false);
    }
  }

  if (!claimed && max_n >= 2) {
    const bool refuted = lists[1] && lists[1]->count() == 0;
    part.expect(refuted, "expected S_2 to have no real root at a=" + to_string(a));
    unsigned mismatches = 0;
    for (unsigned n = 1; n <= max_n + 1; ++n)
      if (!lists[n - 1] || lists[n - 1]->count() != n) ++mismatches;
    part.notes.push_back("a=" + to_string(a) + " < -1: S_n is not real-rooted (S_2 = " +
                         to_string(imaginary_transform(r_seq[1], 2), 'x') + " has no real root; " +
                         std::to_string(mismatches) + " of " + std::to_string(max_n + 1) +
                         " indices have fewer than n real roots). The n-real-roots claim holds only for -1 <= a < 0.");
  }
  part.details[family + " a=" + to_string(a)] =
      json{{"claimed", claimed}, {"root_counts", counts}, {"interlaced", steps}};
  return part;
}

}  // namespace

SuiteReport interlacing_real(unsigned max_n) {
  SuiteReport report;
  report.name = "interlacing-R";
  fan_out(report, rationals({"1/4", "1/2", "1", "3/2", "10"}),
          [max_n](const Rational& a) { return interlacing_for(a, max_n, false); });
  return report;
}

SuiteReport interlacing_imaginary(unsigned max_n) {
  SuiteReport report;
  report.name = "interlacing-S";
  fan_out(report, rationals({"-1/4", "-1/2", "-3/4", "-1", "-3/2", "-10"}),
          [max_n](const Rational& a) { return interlacing_for(a, max_n, true); });
  return report;
}

SuiteReport interlacing(unsigned max_n) {
  SuiteReport report;
  report.name = "interlacing";
  absorb(report, interlacing_real(max_n));
  absorb(report, interlacing_imaginary(max_n));
  return report;
}

// --- special values of a --------------------------------------------------------

SuiteReport special_cases(unsigned max_n) {
  SuiteReport report;
  report.name = "special-cases";

  const auto minus_half = elephant_sequence(max_n, Rational(-1, 2));
  const auto minus_one = elephant_sequence(max_n, Rational(-1));
  const auto zero = elephant_sequence(max_n, Rational(0));
  const auto one = elephant_sequence(max_n, Rational(1));
  for (unsigned n = 1; n <= max_n; ++n) {
    report.expect(minus_half[n - 1] == closed_form_minus_half(n),
                  "R_n(a=-1/2) != ((x-1)/2)^n + ((x+1)/2)^n at n=" + std::to_string(n));
    if (n >= 2) {
      report.expect(minus_one[n - 1] == closed_form_minus_one(n),
                    "R_n(a=-1) != (2x)^(n-2)/(n-1)! U_(n-1)(1/4x^2) at n=" + std::to_string(n));
    }
    report.expect(zero[n - 1] == DensePoly::monomial(1, n), "R_n(a=0) != x^n at n=" + std::to_string(n));
    report.expect(one[n - 1] == oracle::chebyshev_T(n), "R_n(a=1) != Chebyshev T_n at n=" + std::to_string(n));
    report.expect(u_poly(n) == u_poly_by_recurrence(n), "U_n triangle/recurrence mismatch at n=" + std::to_string(n));
  }

  for (unsigned n = 1; n <= std::min(max_n, 15U); ++n) {
    DensePoly from_v = tanh_poly_V(n - 1) * Rational(Rational(1) / Rational(factorial(n - 1)));
    if (n % 2 == 0) from_v = -from_v;
    const DensePoly t = limit_poly_T(n);
    report.expect(from_v == t, "(-1)^(n-1) V_(n-1)/(n-1)! != T_n at n=" + std::to_string(n));
    report.expect(leading_coeff_in_a(n) == t, "a^(n-1) coefficient of R_n != T_n at n=" + std::to_string(n));
  }

  for (ClosedCase c : {ClosedCase::p0, ClosedCase::p_quarter, ClosedCase::p_half, ClosedCase::p1}) {
    const ErwParams params(closed_case_memory(c));
    for (unsigned n = 1; n <= max_n; ++n) {
      report.expect(closed_form_table(n, c) == exact_distribution_dp(n, params),
                    "closed-form law != DP at " + at(n, params.a));
    }
  }
  for (unsigned m = 1; 2 * m <= max_n; ++m) {
    for (ClosedCase c : {ClosedCase::p0, ClosedCase::p_quarter}) {
      const ErwParams params(closed_case_memory(c));
      report.expect(return_probability(2 * m, params) == return_probability_closed(m, c),
                    "return probability closed form != DP at " + at(2 * m, params.a));
    }
  }
  return report;
}

// --- combinatorics --------------------------------------------------------------

SuiteReport eulerian(unsigned max_n) {
  SuiteReport report;
  report.name = "eulerian";

  const EulerianTable table(12);
  for (unsigned n = 1; n <= 12; ++n) {
    const auto& row = table.row(n);
    Integer sum = 0;
    for (const auto& v : row) sum += v;
    report.expect(sum == factorial(n), "Eulerian row sum != n! at n=" + std::to_string(n));
    bool palindrome = true;
    for (unsigned k = 0; k < n; ++k)
      if (row[k] != row[n - 1 - k]) palindrome = false;
    report.expect(palindrome, "Eulerian row not palindromic at n=" + std::to_string(n));
  }
  for (unsigned n = 1; n <= std::min(max_n, 10U); ++n) {
    report.expect(EulerianTable(n).row(n) == oracle::eulerian_row_by_permutations(n),
                  "Eulerian row != descent count at n=" + std::to_string(n));
  }
  for (unsigned n = 1; n <= 6; ++n) {
    report.expect(central_eulerian_altsum(n) == elephant::eulerian(2 * n - 1, n),
                  "alternating sum != A(2n-1, n) at n=" + std::to_string(n));
  }
  for (unsigned n = 1; n <= max_n; ++n) {
    report.expect(verify_U_A_identity(n), "U/Eulerian identity fails at n=" + std::to_string(n));
  }

  const std::vector<std::vector<long>> listing{{1}, {1}, {1, 2}, {1, 8}, {1, 22, 16}, {1, 52, 136}, {1, 114, 720, 272}};
  const TriangleT tri(7);
  for (unsigned n = 1; n <= 7; ++n) {
    std::vector<Integer> expected(listing[n - 1].begin(), listing[n - 1].end());
    report.expect(tri.row(n) == expected, "triangle row differs from the reference listing at n=" + std::to_string(n));
  }
  return report;
}

SuiteReport nonorthogonality() {
  SuiteReport report;
  report.name = "nonorthogonality";
  const auto samples = rationals({"-3", "-2", "-1", "-1/2", "0", "1/3", "1/2", "1", "2", "7/3"});
  const auto result = verify_nonorthogonality(samples);
  for (const auto& f : result.failures) report.expect(false, f);
  report.expect(result.samples.size() == samples.size(), "not every sample produced a resultant");
  json rows = json::array();
  for (const auto& s : result.samples) {
    report.expect(s.matches, "resultant != a^4 (a-1)^2 / 9 at a=" + to_string(s.a));
    const bool should_vanish = s.a == 0 || s.a == 1;
    report.expect(s.orthogonal_case == should_vanish,
                  "resultant vanishing pattern wrong at a=" + to_string(s.a));
    rows.push_back(json{{"a", to_string(s.a)}, {"resultant", to_string(s.resultant)}, {"orthogonal_case", s.orthogonal_case}});
  }
  report.expect(result.low_order_identity_holds, "R_{n+1} = (a+1)x R_n - a R_{n-1} fails for n = 1 or 2");
  report.details["resultants"] = rows;
  return report;
}

// --- distribution ---------------------------------------------------------------

namespace {

SuiteReport distribution_for(const Rational& a, unsigned max_n) {
  SuiteReport part;
  const ErwParams params(a);
  for (unsigned n = 1; n <= max_n; ++n) {
    const auto dp = exact_distribution_dp(n, params);
    part.expect(dp.total() == 1, "DP mass != 1 at " + at(n, a));
    part.expect(dp.is_symmetric() && dp.is_nonnegative() && dp.respects_parity(),
                "DP table not symmetric/nonnegative/parity-supported at " + at(n, a));
    try {
      part.expect(distribution_from_charfun(n, params) == dp, "DP != characteristic function at " + at(n, a));
    } catch (const NegativeCoefficient& e) {
      part.expect(false, std::string("negative Fourier coefficient at ") + at(n, a) + ": " + e.what());
    }
    if (n <= 12) part.expect(brute_force_distribution(n, params) == dp, "DP != path enumeration at " + at(n, a));
  }
  return part;
}

}  // namespace

SuiteReport distribution_oracles(unsigned max_n) {
  SuiteReport report;
  report.name = "distribution-oracles";
  fan_out(report,
          rationals({"-1", "-4/5", "-3/5", "-2/5", "-1/5", "0", "1/5", "2/5", "3/5", "4/5", "1"}),
          [max_n](const Rational& a) { return distribution_for(a, max_n); });
  return report;
}

SuiteReport return_asymptotics() {
  SuiteReport report;
  report.name = "return-asymptotics";
  // P(S_2m = 0) against sqrt(2/(pi m)) (a = -1/2) and sqrt(3/(pi m)) (a = -1).
  struct Case {
    const char* a;
    double constant;
    double tolerance;
  };
  json ratios = json::object();
  for (const Case& c : {Case{"-1/2", 2.0, 0.01}, Case{"-1", 3.0, 0.02}}) {
    const ErwParams params(parse_rational(c.a));
    double previous_gap = INFINITY;
    json row = json::array();
    for (unsigned m : {5U, 10U, 20U, 50U}) {
      const double ratio = return_probability(2 * m, params).get_d() / std::sqrt(c.constant / (std::numbers::pi * m));
      const double gap = std::abs(ratio - 1.0);
      report.expect(gap < previous_gap, "return-probability ratio not approaching 1 at m=" + std::to_string(m) + " a=" + c.a);
      previous_gap = gap;
      row.push_back(ratio);
    }
    report.expect(previous_gap < c.tolerance, std::string("return-probability ratio outside tolerance at m=50 a=") + c.a);
    ratios[c.a] = row;
  }
  report.details["return_ratios_m_5_10_20_50"] = ratios;
  return report;
}

SuiteReport distribution(unsigned max_n) {
  SuiteReport report;
  report.name = "distribution";
  absorb(report, distribution_oracles(max_n));
  absorb(report, return_asymptotics());
  return report;
}

// --- moments --------------------------------------------------------------------

SuiteReport moments(unsigned max_n) {
  SuiteReport report;
  report.name = "moments";

  for (const auto& a : rationals({"-1", "-1/2", "0", "1/4", "1/3", "3/4", "1", "2"})) {
    const auto rec = dRn1_sequence(max_n, a);
    const auto gf = dRn1_gf_coeffs(a, max_n);
    const auto polys = elephant_sequence(max_n, a);
    for (unsigned n = 1; n <= max_n; ++n) {
      const Rational& value = rec[n - 1];
      report.expect(dRn1_closed(n, a) == value, "closed form != recurrence at " + at(n, a));
      report.expect(gf[n] == value, "generating function coefficient != recurrence at " + at(n, a));
      report.expect(polys[n - 1].derivative().eval(1) == value, "R_n'(1) from the polynomial != recurrence at " + at(n, a));
      report.expect(dRn1_closed_as_printed(n, a) == dRn1_recurrence(n + 1, a),
                    "printed closed form is not R_{n+1}'(1) at " + at(n, a));
    }
  }
  report.notes.push_back(
      "The closed form (Gamma(n+2)Gamma(2a) - Gamma(n+1+2a)) / ((1-2a)Gamma(2a)Gamma(n+1)) "
      "evaluates to R_{n+1}'(1); R_n'(1) is the same expression at n-1. Checked above for every n and a.");
  report.expect(dRn1_closed_as_printed(1, Rational(1, 4)) != Rational(1),
                "printed closed form unexpectedly gives R_1'(1) = 1 at a=1/4");

  {
    const Rational half(1, 2);
    const auto rec = dRn1_sequence(max_n, half);
    const auto gf = dRn1_gf_coeffs(half, max_n);
    for (unsigned n = 1; n <= max_n; ++n) {
      report.expect(rec[n - 1] == dRn1_half(n), "R_n'(1) != n H_n at " + at(n, half));
      report.expect(gf[n] == rec[n - 1], "generating function coefficient != recurrence at " + at(n, half));
    }
  }

  struct Case {
    const char* a;
    double tolerance;
  };
  json ratios = json::object();
  for (const Case& c : {Case{"1/4", 0.05}, Case{"1/2", 0.15}, Case{"3/4", 0.05}}) {
    const Rational a = parse_rational(c.a);
    double previous_gap = INFINITY;
    json row = json::array();
    for (unsigned n : {10U, 100U, 1000U}) {
      const double ratio = asymptotic_ratio(n, a);
      const double gap = std::abs(ratio - 1.0);
      report.expect(gap < previous_gap, "asymptotic ratio not approaching 1 at n=" + std::to_string(n) + " a=" + c.a);
      previous_gap = gap;
      row.push_back(ratio);
    }
    report.expect(previous_gap < c.tolerance, std::string("asymptotic ratio outside tolerance at n=1000 a=") + c.a);
    ratios[c.a] = row;
  }
  report.expect(asymptotic_ratio(1000, 0) == 1.0, "asymptotic ratio at a=0 is not exactly 1");
  report.expect(asymptotic_ratio(100, 1) == 1.0, "asymptotic ratio at a=1 is not exactly 1");
  report.details["asymptotic_ratios_n_10_100_1000"] = ratios;

  // Gaussian limit of the characteristic function in the classical case.
  const double probe = clt_probe(10000, ErwParams(0), 1.0);
  report.expect(std::abs(probe - std::exp(-0.5)) < 1e-3, "|R_n(cos(t/sqrt n)) - exp(-t^2/2)| >= 1e-3 at a=0 n=10^4 t=1");
  report.details["clt_probe_a0_n10000_t1"] = probe;
  return report;
}

SuiteReport gf_numeric() {
  SuiteReport report;
  report.name = "gf-numeric";
  const Rational y(1, 8);
  double previous = INFINITY;
  json residuals = json::array();
  for (unsigned terms : {5U, 10U, 20U, 30U}) {
    const double r = verify_U_gf(y, 0.5, terms);
    report.expect(r < previous, "residual not decreasing at N=" + std::to_string(terms));
    previous = r;
    residuals.push_back(r);
  }
  report.expect(previous < 1e-9, "residual >= 1e-9 at (y, z, N) = (1/8, 1/2, 30)");
  report.expect(verify_U_gf(Rational(1, 1000), 0.5, 30) < 1e-9, "residual >= 1e-9 at y = 1/1000");
  report.expect(verify_U_gf(y, 0.0, 30) == 0.0, "residual != 0 at z = 0");
  report.details["residuals_N_5_10_20_30"] = residuals;
  return report;
}

// --- dispatch -------------------------------------------------------------------

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma21", "interlacing", "special-cases", "eulerian",
                                              "nonorthogonality", "distribution", "moments", "gf-numeric"};
  return names;
}

std::vector<SuiteReport> run_suite(std::string_view name, int max_n) {
  auto n_or = [max_n](unsigned fallback) { return max_n > 0 ? static_cast<unsigned>(max_n) : fallback; };
  if (name == "all") {
    std::vector<SuiteReport> out;
    for (const auto& s : suite_names()) {
      auto one = run_suite(s, max_n);
      out.insert(out.end(), one.begin(), one.end());
    }
    return out;
  }
  if (name == "lemma21") return {lemma21(n_or(40))};
  if (name == "interlacing") return {interlacing(n_or(25))};
  if (name == "special-cases") return {special_cases(n_or(20))};
  if (name == "eulerian") return {eulerian(n_or(8))};
  if (name == "nonorthogonality") return {nonorthogonality()};
  if (name == "distribution") return {distribution(n_or(30))};
  if (name == "moments") return {moments(n_or(100))};
  if (name == "gf-numeric") return {gf_numeric()};
  throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

}  // namespace elephant::verify
