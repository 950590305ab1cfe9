#include "elephant/roots.hpp"

#include <algorithm>

namespace elephant {

NonSquarefree::NonSquarefree(const DensePoly& common_factor)
    : std::runtime_error("NonSquarefree: gcd(p, p') = " + to_string(common_factor) +
                         " is not constant (repeated root)"),
      factor_(common_factor) {}

std::vector<DensePoly> sturm_sequence(const DensePoly& p) {
  if (p.is_zero()) throw std::domain_error("Sturm sequence of the zero polynomial");
  std::vector<DensePoly> chain{p};
  DensePoly d = p.derivative();
  if (d.is_zero()) return chain;
  chain.push_back(std::move(d));
  while (true) {
    DensePoly r = chain[chain.size() - 2].divmod(chain.back()).remainder;
    if (r.is_zero()) break;
    chain.push_back((-r).abs_normalized());
  }
  return chain;
}

namespace {

int count_changes(const std::vector<int>& signs) {
  int changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int sign_variations(const std::vector<DensePoly>& chain, const Rational& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) signs.push_back(q.sign_at(x));
  return count_changes(signs);
}

int sign_variations_at_infinity(const std::vector<DensePoly>& chain, int sign) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& q : chain) {
    int s = elephant::sign(q.leading());
    if (sign < 0 && *q.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return count_changes(signs);
}

int count_roots(const std::vector<DensePoly>& chain, const RootDomain& domain) {
  // V(lo) - V(hi) counts roots in (lo, hi]; drop hi itself if it is a root.
  const int v_lo = domain.lo ? sign_variations(chain, *domain.lo) : sign_variations_at_infinity(chain, -1);
  const int v_hi = domain.hi ? sign_variations(chain, *domain.hi) : sign_variations_at_infinity(chain, +1);
  const int at_hi = domain.hi && chain.front().sign_at(*domain.hi) == 0 ? 1 : 0;
  return v_lo - v_hi - at_hi;
}

Rational cauchy_bound(const DensePoly& p) {
  if (p.is_zero()) throw std::domain_error("root bound of the zero polynomial");
  Rational best = 0;
  const Rational& lead = p.leading();
  for (std::size_t j = 0; j + 1 < p.size(); ++j) {
    Rational ratio = abs(p.coeffs()[j] / lead);
    if (ratio > best) best = ratio;
  }
  return best + 1;
}

namespace {

class Isolator {
 public:
  Isolator(const DensePoly& p, std::vector<DensePoly> chain, Rational width, RootList& out)
      : p_(p), chain_(std::move(chain)), width_(std::move(width)), out_(out) {}

  void run(const Rational& lo, const Rational& hi, int count) {
    if (count <= 0) return;
    const int s_lo = p_.sign_at(lo);
    const int s_hi = p_.sign_at(hi);
    if (count == 1 && s_lo != 0 && s_hi != 0) {
      refine_single(lo, hi, s_lo, s_hi);
      return;
    }
    const Rational mid = (lo + hi) / 2;
    const int s_mid = p_.sign_at(mid);
    const int v_lo = sign_variations(chain_, lo);
    const int v_mid = sign_variations(chain_, mid);
    int left = v_lo - v_mid;
    if (s_mid == 0) {
      out_.exact_roots.push_back(mid);
      --left;
    }
    const int right = count - left - (s_mid == 0 ? 1 : 0);
    run(lo, mid, left);
    run(mid, hi, right);
  }

 private:
  void refine_single(Rational lo, Rational hi, int s_lo, int s_hi) {
    while (hi - lo > width_) {
      Rational mid = (lo + hi) / 2;
      const int s_mid = p_.sign_at(mid);
      if (s_mid == 0) {
        out_.exact_roots.push_back(std::move(mid));
        return;
      }
      if (s_mid == s_lo) {
        lo = std::move(mid);
      } else {
        hi = std::move(mid);
      }
    }
    out_.intervals.push_back({std::move(lo), std::move(hi), s_lo, s_hi});
  }

  const DensePoly& p_;
  std::vector<DensePoly> chain_;
  Rational width_;
  RootList& out_;
};

}  // namespace

RootList isolate_roots(const DensePoly& p, const RootDomain& domain, const Rational& width) {
  if (p.is_zero()) throw std::domain_error("cannot isolate roots of the zero polynomial");
  if (width <= 0) throw std::invalid_argument("isolation width must be positive");

  RootList out;
  out.poly = p;
  if (p.size() == 1) return out;

  const DensePoly g = gcd(p, p.derivative());
  if (g.size() > 1) throw NonSquarefree(g);

  auto chain = sturm_sequence(p);
  const Rational bound = cauchy_bound(p);
  const Rational lo = domain.lo ? *domain.lo : Rational(-bound);
  const Rational hi = domain.hi ? *domain.hi : bound;
  if (lo >= hi) return out;

  const int total = count_roots(chain, RootDomain::open(lo, hi));
  Isolator(p, std::move(chain), width, out).run(lo, hi, total);

  std::sort(out.intervals.begin(), out.intervals.end(),
            [](const auto& a, const auto& b) { return a.lo < b.lo; });
  std::sort(out.exact_roots.begin(), out.exact_roots.end());
  if (static_cast<int>(out.count()) != total) {
    throw std::logic_error("root isolation lost a root: Sturm count " + std::to_string(total) +
                           ", isolated " + std::to_string(out.count()));
  }
  return out;
}

// --- interlacing --------------------------------------------------------------

namespace {

struct Item {
  int list;
  const DensePoly* poly;
  Rational lo;
  Rational hi;
  int sign_lo = 0;
  bool exact = false;
  int bisections = 0;
};

bool overlaps(const Item& a, const Item& b) {
  if (a.exact && b.exact) return a.lo == b.lo;
  if (a.exact) return b.lo < a.lo && a.lo < b.hi;
  if (b.exact) return a.lo < b.lo && b.lo < a.hi;
  return a.lo < b.hi && b.lo < a.hi;
}

std::string describe(const Item& it) {
  std::string who = it.list == 0 ? "first" : "second";
  if (it.exact) return who + " list root " + to_string(it.lo);
  return who + " list root in (" + to_string(it.lo) + ", " + to_string(it.hi) + ")";
}

void bisect(Item& it, int cap, int& total) {
  if (it.exact) return;
  if (it.bisections >= cap) {
    throw RefinementBudgetExceeded("interlacing refinement exceeded " + std::to_string(cap) +
                                   " bisections for " + describe(it));
  }
  ++it.bisections;
  ++total;
  Rational mid = (it.lo + it.hi) / 2;
  const int s = it.poly->sign_at(mid);
  if (s == 0) {
    it.lo = mid;
    it.hi = std::move(mid);
    it.exact = true;
  } else if (s == it.sign_lo) {
    it.lo = std::move(mid);
  } else {
    it.hi = std::move(mid);
  }
}

std::vector<Item> items_of(const RootList& roots, int list) {
  std::vector<Item> items;
  for (const auto& iv : roots.intervals) {
    items.push_back({list, &roots.poly, iv.lo, iv.hi, iv.sign_lo, false, 0});
  }
  for (const auto& r : roots.exact_roots) items.push_back({list, &roots.poly, r, r, 0, true, 0});
  return items;
}

}  // namespace

InterlacingReport check_interlacing(RootList first, RootList second, InterlaceMode mode,
                                    int max_bisections) {
  InterlacingReport report;
  if (first.count() == 0 || second.count() == 0) {
    report.interlaced = true;
    report.vacuous = true;
    report.note = "one list is empty; interlacing holds vacuously";
    return report;
  }
  // A shared real root can never be separated by bisection.
  const DensePoly common = gcd(first.poly, second.poly);
  if (common.size() > 1 && count_roots(sturm_sequence(common), RootDomain::whole_line()) > 0) {
    throw InterlacingViolated("the polynomials share the real roots of " + to_string(common, 'x'));
  }
  const auto n1 = static_cast<long>(first.count());
  const auto n2 = static_cast<long>(second.count());
  if (std::abs(n1 - n2) != 1) {
    throw InterlacingViolated("root counts " + std::to_string(n1) + " and " + std::to_string(n2) +
                              " cannot interlace");
  }

  auto items = items_of(first, 0);
  auto more = items_of(second, 1);
  items.insert(items.end(), more.begin(), more.end());

  bool clean = false;
  while (!clean) {
    clean = true;
    for (std::size_t i = 0; i < items.size(); ++i) {
      for (std::size_t j = i + 1; j < items.size(); ++j) {
        if (items[i].list == items[j].list || !overlaps(items[i], items[j])) continue;
        if (items[i].exact && items[j].exact) {
          throw InterlacingViolated("shared root: " + describe(items[i]) + " and " + describe(items[j]));
        }
        clean = false;
        bisect(items[i], max_bisections, report.bisections);
        bisect(items[j], max_bisections, report.bisections);
      }
    }
  }

  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) { return a.lo < b.lo; });
  for (std::size_t i = 0; i + 1 < items.size(); ++i) {
    if (items[i].list == items[i + 1].list) {
      throw InterlacingViolated("consecutive roots from the same list: " + describe(items[i]) +
                                " and " + describe(items[i + 1]));
    }
  }
  if (mode == InterlaceMode::strict_open_interval) {
    for (const auto& it : items) {
      if (it.lo < -1 || it.hi > 1 || (it.exact && (it.lo == -1 || it.lo == 1))) {
        throw InterlacingViolated(describe(it) + " lies outside (-1, 1)");
      }
    }
  }

  for (const auto& it : items) report.order.push_back({it.list, it.lo, it.hi, it.exact});
  report.interlaced = true;
  return report;
}

}  // namespace elephant
