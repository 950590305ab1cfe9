#include "elephant/walk.hpp"

#include "elephant/combinatorics.hpp"
#include "elephant/families.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <thread>

namespace elephant {

ErwParams::ErwParams(Rational memory) : a(std::move(memory)) {
  if (a < -1 || a > 1) {
    throw InvalidMemory("memory parameter a = " + to_string(a) +
                        " outside [-1, 1]; step probabilities would leave [0, 1]");
  }
}

Rational DistributionTable::at(int k) const {
  auto it = probs.find(k);
  return it == probs.end() ? Rational(0) : it->second;
}

Rational DistributionTable::total() const {
  Rational sum = 0;
  for (const auto& [k, p] : probs) sum += p;
  return sum;
}

bool DistributionTable::is_symmetric() const {
  return std::all_of(probs.begin(), probs.end(), [this](const auto& kv) { return at(-kv.first) == kv.second; });
}

bool DistributionTable::is_nonnegative() const {
  return std::all_of(probs.begin(), probs.end(), [](const auto& kv) { return kv.second >= 0; });
}

bool DistributionTable::respects_parity() const {
  const int n = static_cast<int>(this->n);
  return std::all_of(probs.begin(), probs.end(), [n](const auto& kv) {
    const int k = kv.first;
    return std::abs(k) <= n && ((k + n) % 2 == 0 || kv.second == 0);
  });
}

namespace {

DistributionTable empty_table(unsigned n) {
  DistributionTable t;
  t.n = n;
  for (int k = -static_cast<int>(n); k <= static_cast<int>(n); k += 2) t.probs[k] = 0;
  return t;
}

void require_positive(unsigned n) {
  if (n < 1) throw std::out_of_range("walk time must be at least 1");
}

// P(step +1 | S_m = s)
Rational up_probability(const Rational& a, int s, unsigned m) { return (1 + a * s / m) / 2; }

}  // namespace

DistributionTable exact_distribution_dp(unsigned n, const ErwParams& params) {
  require_positive(n);
  std::map<int, Rational> current{{-1, Rational(1, 2)}, {1, Rational(1, 2)}};
  for (unsigned m = 1; m < n; ++m) {
    std::map<int, Rational> next;
    for (const auto& [s, mass] : current) {
      if (mass == 0) continue;
      const Rational up = up_probability(params.a, s, m);
      next[s + 1] += mass * up;
      next[s - 1] += mass * (1 - up);
    }
    current = std::move(next);
  }
  DistributionTable table = empty_table(n);
  for (auto& [k, p] : current) table.probs[k] = std::move(p);
  return table;
}

DistributionTable distribution_from_charfun(unsigned n, const ErwParams& params) {
  require_positive(n);
  const LaurentPoly fourier = cos_substitution(elephant_poly(n, params.a));
  DistributionTable table = empty_table(n);
  for (const auto& [k, c] : fourier.terms()) {
    if (c < 0) {
      throw NegativeCoefficient("Fourier coefficient of z^" + std::to_string(k) + " is " +
                                to_string(c) + " < 0");
    }
    if (table.probs.find(k) == table.probs.end()) {
      throw std::logic_error("Fourier coefficient outside the lattice support at k = " + std::to_string(k));
    }
    table.probs[k] = c;
  }
  return table;
}

DistributionTable brute_force_distribution(unsigned n, const ErwParams& params) {
  require_positive(n);
  if (n > kBruteForceMaxN) {
    throw SizeCapExceeded("brute-force enumeration is capped at n = " + std::to_string(kBruteForceMaxN));
  }
  DistributionTable table = empty_table(n);
  const std::uint32_t paths = 1U << n;
  for (std::uint32_t mask = 0; mask < paths; ++mask) {
    Rational weight(1, 2);
    int s = (mask & 1U) != 0 ? 1 : -1;
    for (unsigned m = 1; m < n && weight != 0; ++m) {
      const bool up = ((mask >> m) & 1U) != 0;
      const Rational pu = up_probability(params.a, s, m);
      weight *= up ? pu : Rational(1 - pu);
      s += up ? 1 : -1;
    }
    if (weight != 0) table.probs[s] += weight;
  }
  return table;
}

std::optional<ClosedCase> closed_case_for(const Rational& a) {
  if (a == -1) return ClosedCase::p0;
  if (a == Rational(-1, 2)) return ClosedCase::p_quarter;
  if (a == 0) return ClosedCase::p_half;
  if (a == 1) return ClosedCase::p1;
  return std::nullopt;
}

Rational closed_case_memory(ClosedCase c) {
  switch (c) {
    case ClosedCase::p0: return -1;
    case ClosedCase::p_quarter: return Rational(-1, 2);
    case ClosedCase::p_half: return 0;
    case ClosedCase::p1: return 1;
  }
  return 0;
}

namespace {

Rational over_power_of_two(const Integer& numerator, unsigned exponent) {
  Rational r(numerator);
  mpz_mul_2exp(r.get_den_mpz_t(), r.get_den_mpz_t(), exponent);
  r.canonicalize();
  return r;
}

}  // namespace

Rational closed_form_dist(unsigned n, int k, ClosedCase c) {
  require_positive(n);
  const int ni = static_cast<int>(n);
  if ((k + ni) % 2 != 0) throw std::domain_error("k and n must have the same parity");
  if (std::abs(k) > ni) throw std::domain_error("|k| exceeds n");

  switch (c) {
    case ClosedCase::p0: {
      if (n == 1) return Rational(1, 2);
      if (std::abs(k) > ni - 2) {
        throw std::domain_error("p = 0 closed form is supported on |k| <= n - 2");
      }
      const EulerianTable table(n - 1);
      return Rational(table.at(n - 1, static_cast<unsigned>((ni + k) / 2))) / Rational(factorial(n - 1));
    }
    case ClosedCase::p_quarter:
      return over_power_of_two(binomial(2 * n, static_cast<unsigned>(ni + k)), 2 * n - 1);
    case ClosedCase::p_half:
      return over_power_of_two(binomial(n, static_cast<unsigned>((ni + k) / 2)), n);
    case ClosedCase::p1:
      return std::abs(k) == ni ? Rational(1, 2) : Rational(0);
  }
  return 0;
}

DistributionTable closed_form_table(unsigned n, ClosedCase c) {
  DistributionTable table = empty_table(n);
  for (auto& [k, p] : table.probs) {
    if (c == ClosedCase::p0 && n >= 2 && std::abs(k) > static_cast<int>(n) - 2) continue;
    p = closed_form_dist(n, k, c);
  }
  return table;
}

Rational return_probability(unsigned time, const ErwParams& params) {
  require_positive(time);
  if (time % 2 == 1) return 0;
  return exact_distribution_dp(time, params).at(0);
}

Rational return_probability_closed(unsigned m, ClosedCase c) {
  if (m < 1) throw std::out_of_range("return time index must be at least 1");
  switch (c) {
    case ClosedCase::p_quarter:
      return over_power_of_two(binomial(4 * m, 2 * m), 4 * m - 1);
    case ClosedCase::p0: {
      const EulerianTable table(2 * m - 1);
      return Rational(table.at(2 * m - 1, m)) / Rational(factorial(2 * m - 1));
    }
    default:
      throw std::domain_error("closed return probability only for a = -1/2 and a = -1");
  }
}

// --- simulation ---------------------------------------------------------------

SplitMix64 SplitMix64::stream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 mixer(seed ^ (index * 0xD1B54A32D192ED03ULL));
  return SplitMix64(mixer.next() + index);
}

std::uint64_t SplitMix64::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30U)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27U)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31U);
}

std::uint64_t SplitMix64::below(std::uint64_t bound) {
  // Lemire's multiply-shift with rejection.
  std::uint64_t x = next();
  auto m = static_cast<unsigned __int128>(x) * bound;
  auto low = static_cast<std::uint64_t>(m);
  if (low < bound) {
    const std::uint64_t threshold = -bound % bound;
    while (low < threshold) {
      x = next();
      m = static_cast<unsigned __int128>(x) * bound;
      low = static_cast<std::uint64_t>(m);
    }
  }
  return static_cast<std::uint64_t>(m >> 64U);
}

double SplitMix64::uniform() { return static_cast<double>(next() >> 11U) * 0x1.0p-53; }

double EmpiricalTable::freq(int k) const {
  auto it = counts.find(k);
  if (it == counts.end() || samples == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(samples);
}

namespace {

int run_history(unsigned n, double p, SplitMix64& rng, std::vector<signed char>& steps) {
  steps.resize(n);
  steps[0] = (rng.next() >> 63U) != 0 ? 1 : -1;
  int s = steps[0];
  for (unsigned m = 1; m < n; ++m) {
    const signed char remembered = steps[rng.below(m)];
    const signed char step = rng.uniform() < p ? remembered : static_cast<signed char>(-remembered);
    steps[m] = step;
    s += step;
  }
  return s;
}

int run_conditional(unsigned n, double a, SplitMix64& rng) {
  int s = (rng.next() >> 63U) != 0 ? 1 : -1;
  for (unsigned m = 1; m < n; ++m) {
    const double up = 0.5 * (1.0 + a * s / static_cast<double>(m));
    s += rng.uniform() < up ? 1 : -1;
  }
  return s;
}

}  // namespace

EmpiricalTable simulate(unsigned n, const ErwParams& params, const McConfig& cfg) {
  require_positive(n);
  if (cfg.samples < 1) throw std::invalid_argument("simulation needs at least one sample");

  unsigned workers = cfg.threads != 0 ? cfg.threads : std::max(1U, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, cfg.samples));

  const double p = params.p().get_d();
  const double a = params.a.get_d();
  const std::size_t width = 2 * n + 1;
  std::vector<std::vector<std::uint64_t>> partial(workers, std::vector<std::uint64_t>(width, 0));

  auto work = [&](unsigned w) {
    const std::uint64_t begin = cfg.samples * w / workers;
    const std::uint64_t end = cfg.samples * (w + 1) / workers;
    std::vector<signed char> steps;
    auto& counts = partial[w];
    for (std::uint64_t i = begin; i < end; ++i) {
      SplitMix64 rng = SplitMix64::stream(cfg.seed, i);
      const int s = cfg.sampler == Sampler::history ? run_history(n, p, rng, steps)
                                                    : run_conditional(n, a, rng);
      ++counts[static_cast<std::size_t>(s + static_cast<int>(n))];
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w);
  for (auto& t : pool) t.join();

  EmpiricalTable table;
  table.n = n;
  table.samples = cfg.samples;
  for (int k = -static_cast<int>(n); k <= static_cast<int>(n); k += 2) {
    std::uint64_t total = 0;
    for (const auto& c : partial) total += c[static_cast<std::size_t>(k + static_cast<int>(n))];
    table.counts[k] = total;
  }
  return table;
}

double tv_distance(const EmpiricalTable& empirical, const DistributionTable& exact) {
  double sum = 0.0;
  for (const auto& [k, p] : exact.probs) sum += std::abs(empirical.freq(k) - p.get_d());
  for (const auto& [k, c] : empirical.counts) {
    if (exact.probs.find(k) == exact.probs.end()) sum += empirical.freq(k);
  }
  return 0.5 * sum;
}

double tv_distance(const EmpiricalTable& lhs, const EmpiricalTable& rhs) {
  double sum = 0.0;
  for (const auto& [k, c] : lhs.counts) sum += std::abs(lhs.freq(k) - rhs.freq(k));
  for (const auto& [k, c] : rhs.counts) {
    if (lhs.counts.find(k) == lhs.counts.end()) sum += rhs.freq(k);
  }
  return 0.5 * sum;
}

double clt_probe(unsigned n, const ErwParams& params, double t) {
  require_positive(n);
  const DensePoly r = elephant_poly(n, params.a);
  if (t == 0.0) return r.eval(1).get_d();  // exact: R_n(1) = 1
  return r.eval_double(std::cos(t / std::sqrt(static_cast<double>(n))));
}

}  // namespace elephant
