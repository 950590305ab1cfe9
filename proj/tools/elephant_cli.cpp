// elephant: command-line front end for the elephant polynomial library.
//
// Exit codes: 0 success, 2 usage error, 3 verification or oracle failure.

#include "elephant/combinatorics.hpp"
#include "elephant/families.hpp"
#include "elephant/io.hpp"
#include "elephant/moments.hpp"
#include "elephant/roots.hpp"
#include "elephant/verify.hpp"
#include "elephant/walk.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace elephant;
using io::json;

constexpr int kUsage = 2;
constexpr int kFailed = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string a_text;
  std::string width_text;
  std::string family = "R";
  std::string format;
  std::string out;
  std::string method = "dp";
  std::string suite = "all";
  std::string sampler = "history";
  std::string csv_path;
  int n = -1;
  int max_n = -1;
  unsigned threads = 0;
  std::uint64_t seed = 0;
  std::uint64_t samples = 100000;
  bool check_interlacing = false;
  bool no_compare = false;
};

Rational rational_flag(const std::string& text, const char* flag) {
  try {
    return parse_rational(text);
  } catch (const ParseError& e) {
    throw UsageError(std::string(flag) + ": " + e.what());
  }
}

Rational require_a(const Options& o) {
  if (o.a_text.empty()) throw UsageError("--a is required");
  return rational_flag(o.a_text, "--a");
}

// Either --n (a single index) or --max-n (indices 1..max_n).
std::pair<unsigned, unsigned> index_range(const Options& o) {
  if (o.n >= 0 && o.max_n >= 0) throw UsageError("give either --n or --max-n, not both");
  if (o.n >= 0) return {static_cast<unsigned>(o.n), static_cast<unsigned>(o.n)};
  if (o.max_n >= 1) return {1U, static_cast<unsigned>(o.max_n)};
  throw UsageError("--n or --max-n is required");
}

unsigned require_n(const Options& o) {
  if (o.n < 0) throw UsageError("--n is required");
  return static_cast<unsigned>(o.n);
}

std::string format_or(const Options& o, const char* fallback) {
  return o.format.empty() ? fallback : o.format;
}

void emit(const Options& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary);
  if (!file) throw UsageError("cannot open " + o.out + " for writing");
  file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

// --- poly ---------------------------------------------------------------------

DensePoly family_member(Family f, unsigned n, const std::optional<Rational>& a) {
  auto need_a = [&]() -> const Rational& {
    if (!a) throw UsageError(std::string("family ") + std::string(family_name(f)) + " needs --a");
    return *a;
  };
  auto need_positive = [&] {
    if (n == 0) throw UsageError(std::string("family ") + std::string(family_name(f)) + " starts at n = 1");
  };
  switch (f) {
    case Family::R:
      need_positive();
      return elephant_poly(n, need_a());
    case Family::S:
      need_positive();
      return imaginary_transform(n, need_a());
    case Family::T:
      need_positive();
      return limit_poly_T(n);
    case Family::V:
      return tanh_poly_V(n);
    case Family::U:
      need_positive();
      return u_poly(n);
    case Family::Apoly:
      need_positive();
      return eulerian_poly(n);
  }
  throw UsageError("unknown family");
}

int cmd_poly(const Options& o) {
  Family f;
  try {
    f = parse_family(o.family);
  } catch (const std::exception& e) {
    throw UsageError(e.what());
  }
  const bool takes_a = f == Family::R || f == Family::S;
  std::optional<Rational> a;
  if (takes_a) a = require_a(o);
  else if (!o.a_text.empty()) throw UsageError("family " + o.family + " takes no --a");

  const auto [first, last] = index_range(o);
  const std::string fmt = format_or(o, "json");
  std::ostringstream out;
  json records = json::array();
  if (fmt == "csv") out << "family,n,degree,coeffs\n";
  for (unsigned n = first; n <= last; ++n) {
    const DensePoly p = family_member(f, n, a);
    if (fmt == "json") {
      records.push_back(io::family_record(f, n, a, p));
    } else if (fmt == "csv") {
      out << family_name(f) << ',' << n << ',' << (p.degree() ? std::to_string(*p.degree()) : "") << ',';
      for (std::size_t j = 0; j < p.size(); ++j) out << (j ? " " : "") << to_string(p.coeffs()[j]);
      out << '\n';
    } else {
      out << family_name(f) << '_' << n << "(x) = " << to_string(p, 'x') << '\n';
    }
  }
  if (fmt == "json") out << dump(first == last ? records[0] : records);
  emit(o, out.str());
  return 0;
}

// --- roots --------------------------------------------------------------------

int cmd_roots(const Options& o) {
  if (o.family != "R" && o.family != "S") throw UsageError("roots supports --family R or S");
  const bool imaginary = o.family == "S";
  const Rational a = require_a(o);
  const auto [first, last] = index_range(o);
  if (first == 0) throw UsageError("roots needs n >= 1");
  const Rational width = o.width_text.empty() ? default_isolation_width() : rational_flag(o.width_text, "--width");
  if (width <= 0) throw UsageError("--width must be positive");

  const RootDomain domain = imaginary ? RootDomain::whole_line() : RootDomain::open(-1, 1);
  const InterlaceMode mode = imaginary ? InterlaceMode::whole_line : InterlaceMode::strict_open_interval;

  std::vector<RootList> lists;
  std::vector<unsigned> indices;
  for (unsigned n = first; n <= last; ++n) {
    const DensePoly r = elephant_poly(n, a);
    try {
      lists.push_back(isolate_roots(imaginary ? imaginary_transform(r, n) : r, domain, width));
    } catch (const NonSquarefree& e) {
      std::cerr << "NonSquarefree: " << o.family << '_' << n << " at a=" << to_string(a) << ": " << e.what() << '\n';
      return kFailed;
    }
    indices.push_back(n);
  }

  std::vector<std::optional<bool>> interlaced(lists.size());
  std::vector<std::string> problems;
  if (o.check_interlacing) {
    for (std::size_t i = 0; i + 1 < lists.size(); ++i) {
      try {
        const auto rep = check_interlacing(lists[i], lists[i + 1], mode);
        interlaced[i] = rep.interlaced;
        if (!rep.interlaced) problems.push_back("n=" + std::to_string(indices[i]) + ": not interlaced");
      } catch (const std::exception& e) {
        interlaced[i] = false;
        problems.push_back("n=" + std::to_string(indices[i]) + ": " + e.what());
      }
    }
  }

  std::size_t total = 0;
  json reports = json::array();
  for (std::size_t i = 0; i < lists.size(); ++i) {
    total += lists[i].count();
    reports.push_back(io::root_report(indices[i], a, lists[i], interlaced[i]));
  }

  if (!o.csv_path.empty()) {
    std::ofstream csv(o.csv_path, std::ios::binary);
    if (!csv) throw UsageError("cannot open " + o.csv_path + " for writing");
    csv << "n,root_index,mid_float\n";
    for (std::size_t i = 0; i < lists.size(); ++i) {
      unsigned k = 0;
      std::vector<double> mids;
      for (const auto& iv : lists[i].intervals) mids.push_back(iv.mid_float());
      for (const auto& r : lists[i].exact_roots) mids.push_back(r.get_d());
      std::sort(mids.begin(), mids.end());
      for (double m : mids) csv << indices[i] << ',' << k++ << ',' << io::format_double(m) << '\n';
    }
  }

  const bool ok = problems.empty();
  const std::string fmt = format_or(o, "json");
  std::ostringstream out;
  if (fmt == "json") {
    json doc{{"family", o.family}, {"a", to_string(a)}, {"total_roots", total}, {"results", reports}};
    if (o.check_interlacing) doc["interlacing"] = ok ? "pass" : "fail";
    out << dump(doc);
  } else if (fmt == "csv") {
    out << "n,root_count\n";
    for (std::size_t i = 0; i < lists.size(); ++i) out << indices[i] << ',' << lists[i].count() << '\n';
  } else {
    for (std::size_t i = 0; i < lists.size(); ++i)
      out << o.family << '_' << indices[i] << ": " << lists[i].count() << " real roots\n";
    out << "total " << total << '\n';
    if (o.check_interlacing) out << "interlacing " << (ok ? "pass" : "fail") << '\n';
  }
  emit(o, out.str());
  for (const auto& p : problems) std::cerr << "interlacing failure: " << p << '\n';
  return ok ? 0 : kFailed;
}

// --- dist ---------------------------------------------------------------------

ErwParams memory_params(const Rational& a) {
  try {
    return ErwParams(a);
  } catch (const InvalidMemory& e) {
    throw UsageError(e.what());
  }
}

int cmd_dist(const Options& o) {
  const unsigned n = require_n(o);
  if (n == 0) throw UsageError("--n must be at least 1");
  const Rational a = require_a(o);
  const ErwParams params = memory_params(a);
  const auto closed = closed_case_for(a);

  auto run = [&](const std::string& method) -> DistributionTable {
    if (method == "dp") return exact_distribution_dp(n, params);
    if (method == "charfun") return distribution_from_charfun(n, params);
    if (method == "closed") return closed_form_table(n, *closed);
    return brute_force_distribution(n, params);
  };

  const std::string& method = o.method;
  if (method != "dp" && method != "charfun" && method != "closed" && method != "brute")
    throw UsageError("--method must be dp, charfun, closed or brute");
  if (method == "closed" && !closed) throw UsageError("--method closed needs a in {-1, -1/2, 0, 1}");
  if (method == "brute" && n > kBruteForceMaxN)
    throw UsageError("--method brute is limited to n <= " + std::to_string(kBruteForceMaxN));

  DistributionTable table;
  try {
    table = run(method);
  } catch (const NegativeCoefficient& e) {
    std::cerr << "oracle failure: " << e.what() << '\n';
    return kFailed;
  }

  json compared = json::array({method});
  if (!o.no_compare) {
    std::vector<std::string> others{"dp", "charfun"};
    if (closed) others.push_back("closed");
    if (n <= kBruteForceMaxN) others.push_back("brute");
    for (const auto& other : others) {
      if (other == method) continue;
      try {
        if (!(run(other) == table)) {
          std::cerr << "oracle disagreement: " << method << " != " << other << " at n=" << n
                    << " a=" << to_string(a) << '\n';
          return kFailed;
        }
      } catch (const NegativeCoefficient& e) {
        std::cerr << "oracle failure (" << other << "): " << e.what() << '\n';
        return kFailed;
      }
      compared.push_back(other);
    }
  }

  const std::string fmt = format_or(o, "json");
  std::ostringstream out;
  if (fmt == "json") {
    json doc = io::distribution_to_json(table);
    doc["a"] = to_string(a);
    doc["method"] = method;
    doc["agreeing_methods"] = compared;
    out << dump(doc);
  } else if (fmt == "csv") {
    io::write_distribution_csv(out, table);
  } else {
    for (const auto& [k, p] : table.probs)
      if (p != 0) out << "P(S_" << n << " = " << k << ") = " << to_string(p) << '\n';
  }
  emit(o, out.str());
  return 0;
}

// --- simulate -----------------------------------------------------------------

int cmd_simulate(const Options& o) {
  const unsigned n = require_n(o);
  if (n == 0) throw UsageError("--n must be at least 1");
  const Rational a = require_a(o);
  const ErwParams params = memory_params(a);
  if (o.samples == 0) throw UsageError("--samples must be positive");

  McConfig cfg;
  cfg.samples = o.samples;
  cfg.seed = o.seed;
  cfg.threads = o.threads;
  if (o.sampler == "history") cfg.sampler = Sampler::history;
  else if (o.sampler == "conditional") cfg.sampler = Sampler::conditional;
  else throw UsageError("--sampler must be history or conditional");

  const EmpiricalTable emp = simulate(n, params, cfg);
  const double tv = tv_distance(emp, exact_distribution_dp(n, params));

  const std::string fmt = format_or(o, "json");
  std::ostringstream out;
  if (fmt == "json") {
    json doc = io::empirical_to_json(emp);
    doc["a"] = to_string(a);
    doc["seed"] = o.seed;
    doc["rng"] = McConfig::rng_name;
    doc["sampler"] = o.sampler;
    doc["tv_distance"] = tv;
    out << dump(doc);
  } else if (fmt == "csv") {
    io::write_empirical_csv(out, emp);
  } else {
    for (const auto& [k, c] : emp.counts)
      if (c != 0) out << k << '\t' << c << '\t' << io::format_double(emp.freq(k)) << '\n';
    out << "tv_distance " << io::format_double(tv) << '\n';
  }
  emit(o, out.str());
  return 0;
}

// --- verify -------------------------------------------------------------------

int cmd_verify(const Options& o) {
  std::vector<verify::SuiteReport> reports;
  try {
    reports = verify::run_suite(o.suite, o.max_n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  bool ok = true;
  const std::string fmt = format_or(o, "json");
  std::ostringstream out;
  json suites = json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    if (fmt == "json") {
      suites.push_back(r.to_json());
    } else {
      out << (r.passed() ? "PASS " : "FAIL ") << r.name << " (" << r.checks << " checks, " << r.failures.size()
          << " failures)\n";
      for (const auto& note : r.notes) out << "  note: " << note << '\n';
      for (const auto& f : r.failures) out << "  failure: " << f << '\n';
    }
  }
  if (fmt == "json") out << dump(json{{"passed", ok}, {"suites", suites}});
  emit(o, out.str());
  if (!ok) {
    for (const auto& r : reports)
      if (!r.passed()) {
        std::cerr << "verify " << r.name << " failed: " << r.failures.front() << '\n';
        break;
      }
    return kFailed;
  }
  return 0;
}

// --- moments ------------------------------------------------------------------

int cmd_moments(const Options& o) {
  const Rational a = require_a(o);
  if (o.max_n < 1) throw UsageError("--max-n must be at least 1");
  const auto values = dRn1_sequence(static_cast<unsigned>(o.max_n), a);
  const std::string fmt = format_or(o, "csv");
  std::ostringstream out;
  if (fmt == "json") {
    json rows = json::array();
    for (unsigned n = 1; n <= values.size(); ++n) {
      json row{{"n", n}, {"value", to_string(values[n - 1])}, {"value_float", values[n - 1].get_d()}};
      if (n >= 2 && a >= 0 && a <= 1) row["ratio"] = asymptotic_ratio(n, a);
      rows.push_back(row);
    }
    out << dump(json{{"a", to_string(a)}, {"regime", regime_name(regime_of(a))}, {"rows", rows}});
  } else if (fmt == "csv") {
    io::write_moments_csv_header(out);
    for (unsigned n = 1; n <= values.size(); ++n)
      io::write_moments_csv_row(out, MomentRecord{n, a, values[n - 1], regime_of(a)});
  } else {
    for (unsigned n = 1; n <= values.size(); ++n) out << "R_" << n << "'(1) = " << to_string(values[n - 1]) << '\n';
  }
  emit(o, out.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Elephant polynomials and the elephant random walk"};
  app.require_subcommand(1);
  Options o;

  auto common = [&o](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
    sub->add_option("--out", o.out, "Write output to this file instead of stdout");
  };
  auto memory = [&o](CLI::App* sub) { sub->add_option("--a", o.a_text, "Memory parameter a (p, p/q or decimal)"); };
  auto index = [&o](CLI::App* sub) {
    sub->add_option("--n", o.n, "Index n")->check(CLI::NonNegativeNumber);
    sub->add_option("--max-n", o.max_n, "Largest index")->check(CLI::NonNegativeNumber);
  };

  auto* poly = app.add_subcommand("poly", "Print a polynomial of one of the families");
  poly->add_option("--family", o.family, "R, S, T, V, U or A");
  memory(poly);
  index(poly);
  common(poly);

  auto* roots = app.add_subcommand("roots", "Certified real-root isolation for R_n or S_n");
  roots->add_option("--family", o.family, "R or S");
  memory(roots);
  index(roots);
  roots->add_option("--width", o.width_text, "Target isolating-interval width");
  roots->add_flag("--check-interlacing", o.check_interlacing, "Certify interlacing of consecutive indices");
  roots->add_option("--csv", o.csv_path, "Write root midpoints (n, root_index, mid_float) here");
  common(roots);

  auto* dist = app.add_subcommand("dist", "Exact law of S_n");
  memory(dist);
  dist->add_option("--n", o.n, "Time n")->check(CLI::NonNegativeNumber);
  dist->add_option("--method", o.method, "dp, charfun, closed or brute");
  dist->add_flag("--compare", "Cross-check against every applicable method (default)");
  dist->add_flag("--no-compare", o.no_compare, "Skip the cross-method check");
  common(dist);

  auto* sim = app.add_subcommand("simulate", "Monte Carlo estimate of the law of S_n");
  memory(sim);
  sim->add_option("--n", o.n, "Time n")->check(CLI::NonNegativeNumber);
  sim->add_option("--samples", o.samples, "Number of trajectories");
  sim->add_option("--seed", o.seed, "RNG seed");
  sim->add_option("--sampler", o.sampler, "history or conditional");
  sim->add_option("--threads", o.threads, "Worker threads (0 = all cores)");
  common(sim);

  auto* ver = app.add_subcommand("verify", "Run a verification suite");
  ver->add_option("--suite", o.suite, "Suite name or all");
  ver->add_option("--max-n", o.max_n, "Grid size override")->check(CLI::NonNegativeNumber);
  common(ver);

  auto* mom = app.add_subcommand("moments", "R_n'(1) = E[S_n^2] for n = 1..max-n");
  memory(mom);
  mom->add_option("--max-n", o.max_n, "Largest n")->check(CLI::NonNegativeNumber);
  common(mom);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*poly) return cmd_poly(o);
    if (*roots) return cmd_roots(o);
    if (*dist) return cmd_dist(o);
    if (*sim) return cmd_simulate(o);
    if (*ver) return cmd_verify(o);
    if (*mom) return cmd_moments(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
