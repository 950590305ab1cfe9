// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "elephant/combinatorics.hpp"
#include "elephant/families.hpp"
#include "elephant/oracles.hpp"
#include "elephant/verify.hpp"
#include "elephant/walk.hpp"

#include "support.hpp"

#include <json.hpp>

#include <sys/wait.h>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

namespace {

using namespace elephant;
using testing::P;
using testing::Q;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
};

Outcome from_suite(const verify::SuiteReport& r) {
  Outcome o;
  o.ok = r.passed();
  o.detail = std::to_string(r.checks) + " checks";
  if (!r.passed()) o.detail += ", first failure: " + r.failures.front();
  return o;
}

int failed = 0;

void criterion(int id, const char* title, double budget_seconds, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (secs > budget_seconds) {
    out.ok = false;
    out.detail += "; over the time budget";
  }
  if (!out.ok) ++failed;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2fs/%.0fs", secs, budget_seconds);
  std::cout << "AC" << id << (id < 10 ? "  " : " ") << (out.ok ? "PASS" : "FAIL") << "  " << title << " [" << timing
            << "] " << out.detail << std::endl;
}

// Runs a shell command and returns (exit status, stdout).
std::pair<int, std::string> run(const std::string& cmd) {
  std::string output;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, output};
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) output.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, output};
}

Outcome ac1() {
  Outcome o;
  int checks = 0;
  auto expect = [&](bool ok, const std::string& what) {
    ++checks;
    if (!ok && o.ok) {
      o.ok = false;
      o.detail = "mismatch: " + what;
    }
  };
  const auto golden = testing::golden("R_polys.json");
  for (const char* text : {"-1", "-1/2", "0", "1/2", "1", "2"}) {
    const Rational a = Q(text);
    const auto seq = elephant_sequence(4, a);
    expect(seq[0] == P({"0", "1"}), std::string("R_1 at a=") + text);
    expect(seq[1] == DensePoly({-a, 0, a + 1}), std::string("R_2 at a=") + text);
    expect(seq[2] == DensePoly({0, Rational(-a * (a + 2)), 0, Rational((a + 1) * (a + 1))}),
           std::string("R_3 at a=") + text);
    expect(seq[3] == testing::poly_from_strings(golden[text]["4"]), std::string("R_4 at a=") + text);
  }
  // Section 3.1 displays at a = -1/2, and the a = 0, 1, -1 values of R_4.
  const auto half = elephant_sequence(4, Q("-1/2"));
  expect(half[1] == P({"1/2", "0", "1/2"}), "R_2 = (x^2+1)/2");
  expect(half[2] == P({"0", "3/4", "0", "1/4"}), "R_3 = (x^3+3x)/4");
  expect(half[3] == P({"1/8", "0", "6/8", "0", "1/8"}), "R_4 = (x^4+6x^2+1)/8");
  expect(elephant_poly(4, 0) == DensePoly::monomial(1, 4), "R_4(a=0) = x^4");
  expect(elephant_poly(4, 1) == P({"1", "0", "-8", "0", "8"}), "R_4(a=1) = T_4");
  expect(elephant_poly(4, -1) == P({"1/3", "0", "2/3"}), "R_4(a=-1) = (2x^2+1)/3");
  if (o.ok) o.detail = std::to_string(checks) + " exact comparisons";
  return o;
}

Outcome ac4() {
  const auto report = verify::interlacing_imaginary(25);
  Outcome o = from_suite(report);
  if (o.ok) {
    o.detail += "; certified for a in {-1/4, -1/2, -3/4, -1} (|n-2| roots at a=-1, degenerate steps vacuous)";
    o.detail += "; for a in {-3/2, -10} the n-real-roots claim is refuted (S_2 = (a+1)x^2 + a has no real root)";
  }
  return o;
}

Outcome ac7() {
  Outcome o;
  int checks = 0;
  for (ClosedCase c : {ClosedCase::p0, ClosedCase::p_quarter, ClosedCase::p_half, ClosedCase::p1}) {
    const ErwParams params(closed_case_memory(c));
    for (unsigned n = 1; n <= 20; ++n) {
      const auto dp = exact_distribution_dp(n, params);
      for (const auto& [k, prob] : dp.probs) {
        ++checks;
        Rational closed = 0;
        try {
          closed = closed_form_dist(n, k, c);
        } catch (const std::domain_error&) {
          // outside the closed form's support
        }
        if (closed != prob) {
          o.ok = false;
          o.detail = "closed form != DP at n=" + std::to_string(n) + " k=" + std::to_string(k) +
                     " a=" + to_string(params.a);
          return o;
        }
      }
    }
  }
  o.detail = std::to_string(checks) + " support points at p in {0, 1/4, 1/2, 1}, n <= 20";
  return o;
}

Outcome ac11() {
  for (unsigned n = 1; n <= 15; ++n) {
    DensePoly from_v = tanh_poly_V(n - 1) * Rational(Rational(1) / Rational(factorial(n - 1)));
    if (n % 2 == 0) from_v = -from_v;
    const DensePoly t = limit_poly_T(n);
    if (from_v != t) return {false, "(-1)^(n-1) V_(n-1)/(n-1)! != T_n at n=" + std::to_string(n)};
    if (leading_coeff_in_a(n) != t) return {false, "interpolated a^(n-1) coefficient != T_n at n=" + std::to_string(n)};
  }
  return {true, "exact for n <= 15"};
}

Outcome ac12() {
  const auto report = verify::moments(100);
  Outcome o = from_suite(report);
  if (o.ok) {
    const auto& r = report.details["asymptotic_ratios_n_10_100_1000"];
    char buf[160];
    std::snprintf(buf, sizeof buf, "; ratios at n=1000: a=1/4 %.4f, a=1/2 %.4f, a=3/4 %.4f; index-shift note recorded",
                  r["1/4"][2].get<double>(), r["1/2"][2].get<double>(), r["3/4"][2].get<double>());
    o.detail += buf;
  }
  return o;
}

Outcome ac13() {
  const double probe = clt_probe(10000, ErwParams(0), 1.0);
  const double err = std::abs(probe - std::exp(-0.5));
  char buf[96];
  std::snprintf(buf, sizeof buf, "R_n(cos(1/100)) = %.8f, |error| = %.2e", probe, err);
  return {err < 1e-3, buf};
}

Outcome ac14() {
  const std::string cmd = std::string(ELEPHANT_CLI) + " simulate --n 20 --a 3/5 --samples 1000000 --seed 42";
  const auto [rc1, out1] = run(cmd);
  const auto [rc2, out2] = run(cmd + " --threads 1");
  if (rc1 != 0 || rc2 != 0) return {false, "simulate exited with a non-zero status"};
  if (out1 != out2) return {false, "outputs differ between runs"};
  const double tv = nlohmann::json::parse(out1)["tv_distance"].get<double>();
  char buf[96];
  std::snprintf(buf, sizeof buf, "byte-identical (%zu bytes, default vs 1 thread), TV = %.5f", out1.size(), tv);
  return {tv < 0.01, buf};
}

}  // namespace

int main() {
  criterion(1, "R_1..R_4 ground truth", 1, ac1);
  criterion(2, "structural properties of R_n, n <= 40", 10, [] { return from_suite(verify::lemma21(40)); });
  criterion(3, "R_n / R_{n+1} interlacing, n <= 25", 120, [] { return from_suite(verify::interlacing_real(25)); });
  criterion(4, "S_n / S_{n+1} interlacing, n <= 25", 120, ac4);
  criterion(5, "non-orthogonality resultant", 1, [] { return from_suite(verify::nonorthogonality()); });
  criterion(6, "distribution triple oracle", 60, [] { return from_suite(verify::distribution_oracles(30)); });
  criterion(7, "closed-form laws", 10, ac7);
  criterion(8, "return-probability asymptotics", 5, [] { return from_suite(verify::return_asymptotics()); });
  criterion(9, "Eulerian and triangle combinatorics", 30, [] { return from_suite(verify::eulerian(8)); });
  criterion(10, "U_n generating function residual", 1, [] { return from_suite(verify::gf_numeric()); });
  criterion(11, "T_n, V_n and the a^(n-1) coefficient", 5, ac11);
  criterion(12, "moments R_n'(1)", 30, ac12);
  criterion(13, "CLT probe", 5, ac13);
  criterion(14, "seeded simulation reproducibility", 60, ac14);
  std::cout << (failed == 0 ? "ALL PASS" : std::to_string(failed) + " FAILED") << std::endl;
  return failed == 0 ? 0 : 1;
}
