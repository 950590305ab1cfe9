#pragma once

// Named verification suites. Each runs a grid of exact checks and collects
// every failure rather than stopping at the first.

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace elephant::verify {

struct SuiteReport {
  std::string name;
  int checks = 0;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  nlohmann::json details = nlohmann::json::object();

  [[nodiscard]] bool passed() const { return failures.empty(); }
  void expect(bool ok, const std::string& what);
  [[nodiscard]] nlohmann::json to_json() const;
};

/// Suite names accepted by run_suite, in the order "all" runs them.
const std::vector<std::string>& suite_names();

/// max_n <= 0 picks the suite's default grid size. Throws
/// std::invalid_argument for an unknown name.
std::vector<SuiteReport> run_suite(std::string_view name, int max_n = 0);

SuiteReport lemma21(unsigned max_n = 40);
SuiteReport interlacing(unsigned max_n = 25);
SuiteReport interlacing_real(unsigned max_n = 25);       // R_n, a > 0
SuiteReport interlacing_imaginary(unsigned max_n = 25);  // S_n, a < 0
SuiteReport special_cases(unsigned max_n = 20);
SuiteReport eulerian(unsigned max_n = 8);
SuiteReport nonorthogonality();
SuiteReport distribution(unsigned max_n = 30);
SuiteReport distribution_oracles(unsigned max_n = 30);
SuiteReport return_asymptotics();
SuiteReport moments(unsigned max_n = 100);
SuiteReport gf_numeric();

}  // namespace elephant::verify
