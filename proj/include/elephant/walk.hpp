#pragma once

// Law of the elephant random walk S_n (first step +-1 with probability 1/2,
// memory parameter a = 2p - 1 in [-1, 1]) computed four ways, plus a seeded
// Monte Carlo simulator.

#include "elephant/ratpoly.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace elephant {

class InvalidMemory : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NegativeCoefficient : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SizeCapExceeded : public std::length_error {
 public:
  using std::length_error::length_error;
};

struct ErwParams {
  Rational a;

  /// Throws InvalidMemory unless -1 <= a <= 1.
  explicit ErwParams(Rational memory);
  [[nodiscard]] Rational p() const { return (a + 1) / 2; }
};

/// P(S_n = k) for every k in {-n, -n+2, ..., n}. Zero probabilities are
/// stored so that tables from different methods compare entry by entry.
struct DistributionTable {
  unsigned n = 0;
  std::map<int, Rational> probs;

  [[nodiscard]] Rational at(int k) const;
  [[nodiscard]] Rational total() const;
  [[nodiscard]] bool is_symmetric() const;
  [[nodiscard]] bool is_nonnegative() const;
  [[nodiscard]] bool respects_parity() const;

  friend bool operator==(const DistributionTable&, const DistributionTable&) = default;
};

/// Forward dynamic programme over (time, position) with the conditional
/// step law P(+1 | S_m = s) = (1 + a s/m)/2.
DistributionTable exact_distribution_dp(unsigned n, const ErwParams& params);

/// Fourier coefficients of phi_n(t) = R_n(cos t). Throws NegativeCoefficient
/// if a coefficient is negative.
DistributionTable distribution_from_charfun(unsigned n, const ErwParams& params);

inline constexpr unsigned kBruteForceMaxN = 14;

/// Sum over all 2^n step sequences of the product of conditional step
/// probabilities. Throws SizeCapExceeded for n > kBruteForceMaxN.
DistributionTable brute_force_distribution(unsigned n, const ErwParams& params);

/// Memory values with a known closed-form law: p = 0, 1/4, 1/2, 1.
enum class ClosedCase { p0, p_quarter, p_half, p1 };

/// Closed case for a, if any (a = -1, -1/2, 0, 1).
std::optional<ClosedCase> closed_case_for(const Rational& a);
Rational closed_case_memory(ClosedCase c);

/// Closed-form P(S_n = k). Throws std::domain_error on parity or support
/// violations (support |k| <= n - 2 for p = 0 when n >= 2).
Rational closed_form_dist(unsigned n, int k, ClosedCase c);

/// Closed-form table; points outside the closed form's support get 0.
DistributionTable closed_form_table(unsigned n, ClosedCase c);

/// P(S_time = 0) from the DP; exactly 0 at odd times.
Rational return_probability(unsigned time, const ErwParams& params);

/// Closed-form return probability at even time 2m for a = -1/2 or a = -1.
Rational return_probability_closed(unsigned m, ClosedCase c);

// --- simulation ---------------------------------------------------------------

/// SplitMix64: the stream for trajectory i is keyed by (seed, i), so results
/// do not depend on how trajectories are distributed across threads.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t state) : state_(state) {}
  static SplitMix64 stream(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next();
  /// Uniform on [0, bound), unbiased.
  std::uint64_t below(std::uint64_t bound);
  /// Uniform on [0, 1) with 53 random bits.
  double uniform();

 private:
  std::uint64_t state_;
};

enum class Sampler {
  history,      // copy or flip a uniformly chosen past step
  conditional,  // step +1 with probability (1 + a S_m/m)/2
};

struct McConfig {
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  Sampler sampler = Sampler::history;
  unsigned threads = 0;  // 0 picks hardware concurrency
  static constexpr const char* rng_name = "splitmix64";
};

struct EmpiricalTable {
  unsigned n = 0;
  std::uint64_t samples = 0;
  std::map<int, std::uint64_t> counts;  // every k in {-n, ..., n} of the right parity

  [[nodiscard]] double freq(int k) const;
};

EmpiricalTable simulate(unsigned n, const ErwParams& params, const McConfig& cfg);

/// Half the l1 distance between the empirical frequencies and an exact law.
double tv_distance(const EmpiricalTable& empirical, const DistributionTable& exact);
double tv_distance(const EmpiricalTable& lhs, const EmpiricalTable& rhs);

/// R_n(cos(t / sqrt n)) in double precision from the exact R_n.
double clt_probe(unsigned n, const ErwParams& params, double t);

}  // namespace elephant
