#pragma once

// Certified real-root isolation with Sturm sequences over the rationals, and
// interlacing checks between consecutive members of a polynomial family.
// No floating point is involved in any certificate; mid_float() exists for
// plotting only.

#include "elephant/ratpoly.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace elephant {

class NonSquarefree : public std::runtime_error {
 public:
  explicit NonSquarefree(const DensePoly& common_factor);
  const DensePoly& common_factor() const { return factor_; }

 private:
  DensePoly factor_;
};

class RefinementBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InterlacingViolated : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Open interval (lo, hi) holding exactly one simple root, with the exact
/// signs of the polynomial at both ends.
struct IsolatingInterval {
  Rational lo;
  Rational hi;
  int sign_lo = 0;
  int sign_hi = 0;

  [[nodiscard]] Rational width() const { return hi - lo; }
  [[nodiscard]] double mid_float() const { return Rational((lo + hi) / 2).get_d(); }
};

/// Open domain (lo, hi) for root search; nullopt bounds mean the whole line.
struct RootDomain {
  std::optional<Rational> lo;
  std::optional<Rational> hi;

  static RootDomain whole_line() { return {}; }
  static RootDomain open(Rational lo, Rational hi) { return {std::move(lo), std::move(hi)}; }
};

struct RootList {
  DensePoly poly;
  std::vector<IsolatingInterval> intervals;  // sorted, pairwise disjoint
  std::vector<Rational> exact_roots;         // sorted

  [[nodiscard]] std::size_t count() const { return intervals.size() + exact_roots.size(); }
};

/// p, p', then negated remainders down to a constant. Each member is scaled
/// by a positive constant, which leaves sign-variation counts unchanged.
std::vector<DensePoly> sturm_sequence(const DensePoly& p);

/// Sign variations of the chain at x (zeros skipped).
int sign_variations(const std::vector<DensePoly>& chain, const Rational& x);
/// Sign variations at +infinity (sign = +1) or -infinity (sign = -1).
int sign_variations_at_infinity(const std::vector<DensePoly>& chain, int sign);

/// Number of distinct real roots in the open domain.
int count_roots(const std::vector<DensePoly>& chain, const RootDomain& domain);

/// 1 + max |c_j / c_deg|; every real root lies strictly inside (-B, B).
Rational cauchy_bound(const DensePoly& p);

inline const Rational& default_isolation_width() {
  static const Rational w(Rational(1) / Rational(Integer(1) << 40));
  return w;
}

/// Isolates every real root of p in the domain to intervals of width <= width.
/// Throws NonSquarefree when gcd(p, p') is not constant and std::domain_error
/// for the zero polynomial.
RootList isolate_roots(const DensePoly& p, const RootDomain& domain,
                       const Rational& width = default_isolation_width());

enum class InterlaceMode { strict_open_interval, whole_line };

struct InterlacingWitness {
  int list = 0;  // 0 for the first list, 1 for the second
  Rational lo;
  Rational hi;
  bool exact = false;
};

struct InterlacingReport {
  bool interlaced = false;
  bool vacuous = false;  // one of the lists was empty
  std::vector<InterlacingWitness> order;
  int bisections = 0;
  std::string note;
};

/// Refines both lists until no interval of one meets an interval of the
/// other, then requires the merged order to alternate between the lists.
/// Throws RefinementBudgetExceeded after max_bisections on one interval and
/// InterlacingViolated with the offending pair otherwise.
InterlacingReport check_interlacing(RootList first, RootList second, InterlaceMode mode,
                                    int max_bisections = 200);

}  // namespace elephant
