#include "elephant/families.hpp"

#include "elephant/combinatorics.hpp"

#include <array>
#include <stdexcept>

namespace elephant {

std::string_view family_name(Family f) {
  switch (f) {
    case Family::R: return "R";
    case Family::S: return "S";
    case Family::T: return "T";
    case Family::V: return "V";
    case Family::U: return "U";
    case Family::Apoly: return "A";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "R") return Family::R;
  if (name == "S") return Family::S;
  if (name == "T") return Family::T;
  if (name == "V") return Family::V;
  if (name == "U") return Family::U;
  if (name == "A" || name == "Apoly") return Family::Apoly;
  throw std::invalid_argument("unknown polynomial family '" + std::string(name) + "'");
}

namespace {

// One step R_m -> R_{m+1}, written into next[0..m+1]. Coefficient j is
//   c_{j-1} (1 + (a/m)(j-1)) - (a/m)(j+1) c_{j+1}.
// cur must be zero from index m+1 on.
void step_into(const std::vector<Rational>& cur, std::vector<Rational>& next, unsigned m, const Rational& a) {
  const Rational a_over_m = a / m;
  const bool memoryless = a == 0;
  auto nonzero = [&](std::size_t i) { return i < cur.size() && sgn(cur[i]) != 0; };
  for (unsigned j = 0; j <= m + 1; ++j) {
    Rational& c = next[j];
    const bool below = j >= 1 && nonzero(j - 1);
    const bool above = !memoryless && nonzero(j + 1);
    if (!below && !above) {
      if (sgn(c) != 0) c = 0;
      continue;
    }
    if (below) {
      c = cur[j - 1];
      if (!memoryless) c += a_over_m * (j - 1) * cur[j - 1];
    } else {
      c = 0;
    }
    if (above) c -= a_over_m * (j + 1) * cur[j + 1];
  }
}

}  // namespace

DensePoly elephant_poly(unsigned n, const Rational& a) {
  if (n < 1) throw std::out_of_range("R_n needs n >= 1");
  // Two buffers reused across steps keep the cost at one allocation per slot.
  std::vector<Rational> cur(n + 1), next(n + 1);
  cur[1] = 1;
  for (unsigned m = 1; m < n; ++m) {
    step_into(cur, next, m, a);
    std::swap(cur, next);
  }
  return DensePoly(std::move(cur));
}

std::vector<DensePoly> elephant_sequence(unsigned max_n, const Rational& a) {
  std::vector<DensePoly> out;
  out.reserve(max_n);
  if (max_n == 0) return out;
  std::vector<Rational> cur{0, 1};
  out.emplace_back(cur);
  for (unsigned m = 1; m < max_n; ++m) {
    std::vector<Rational> next(m + 2);
    step_into(cur, next, m, a);
    cur = std::move(next);
    out.emplace_back(cur);
  }
  return out;
}

DensePoly imaginary_transform(const DensePoly& rn, unsigned n) {
  std::vector<Rational> out(rn.size());
  for (std::size_t j = 0; j < rn.size(); ++j) {
    const Rational& c = rn.coeffs()[j];
    if (c == 0) continue;
    const long diff = static_cast<long>(j) - static_cast<long>(n);
    if (diff % 2 != 0) throw std::logic_error("R_n coefficient violates parity");
    // (-i)^n i^j = i^{j-n}
    const long half = diff / 2;
    out[j] = (half % 2 == 0) ? c : Rational(-c);
  }
  return DensePoly(std::move(out));
}

DensePoly imaginary_transform(unsigned n, const Rational& a) {
  return imaginary_transform(elephant_poly(n, a), n);
}

DensePoly limit_poly_T(unsigned n) {
  if (n < 1) throw std::out_of_range("T_n needs n >= 1");
  const DensePoly x_sq_minus_one({-1, 0, 1});
  DensePoly t = DensePoly::monomial(1, 1);
  for (unsigned m = 1; m < n; ++m) t = x_sq_minus_one * t.derivative() * Rational(1, m);
  return t;
}

DensePoly tanh_poly_V(unsigned n) {
  const DensePoly one_minus_x_sq({1, 0, -1});
  DensePoly v = DensePoly::monomial(1, 1);
  for (unsigned m = 0; m < n; ++m) v = one_minus_x_sq * v.derivative();
  return v;
}

DensePoly closed_form_minus_half(unsigned n) {
  if (n < 1) throw std::out_of_range("closed form needs n >= 1");
  const DensePoly lower({Rational(-1, 2), Rational(1, 2)});
  const DensePoly upper({Rational(1, 2), Rational(1, 2)});
  return pow(lower, n) + pow(upper, n);
}

DensePoly closed_form_minus_one(unsigned n) {
  if (n < 2) throw std::out_of_range("closed form at a = -1 needs n >= 2");
  // (2x)^{n-2} (4x^2)^{-k} = 2^{n-2-2k} x^{n-2-2k}
  const DensePoly u = u_poly(n - 1);
  const Rational inv_fact = Rational(1) / Rational(factorial(n - 1));
  std::vector<Rational> out(n - 1);
  for (std::size_t k = 0; k < u.size(); ++k) {
    const unsigned power = n - 2 - 2 * static_cast<unsigned>(k);
    Rational c = u.coeffs()[k] * inv_fact;
    mpz_mul_2exp(c.get_num_mpz_t(), c.get_num_mpz_t(), power);
    c.canonicalize();
    out[power] = std::move(c);
  }
  return DensePoly(std::move(out));
}

DensePoly leading_coeff_in_a(unsigned n) {
  if (n < 1) throw std::out_of_range("leading coefficient in a needs n >= 1");
  std::vector<Rational> nodes(n);
  std::vector<DensePoly> samples(n);
  for (unsigned i = 0; i < n; ++i) {
    nodes[i] = i;
    samples[i] = elephant_poly(n, nodes[i]);
  }
  std::vector<Rational> out(n + 1);
  std::vector<Rational> values(n);
  for (unsigned j = 0; j <= n; ++j) {
    for (unsigned i = 0; i < n; ++i) values[i] = samples[i].coeff(j);
    out[j] = interpolate(nodes, values).coeff(n - 1);
  }
  return DensePoly(std::move(out));
}

Rational sylvester_resultant_quadratic(const DensePoly& f, const DensePoly& g) {
  if (f.size() > 3 || g.size() > 3) throw std::invalid_argument("expected polynomials of degree <= 2");
  const std::array<Rational, 3> fc{f.coeff(2), f.coeff(1), f.coeff(0)};
  const std::array<Rational, 3> gc{g.coeff(2), g.coeff(1), g.coeff(0)};
  std::array<std::array<Rational, 4>, 4> m{};
  for (int shift = 0; shift < 2; ++shift) {
    for (int j = 0; j < 3; ++j) {
      m[shift][shift + j] = fc[j];
      m[2 + shift][shift + j] = gc[j];
    }
  }
  Rational det = 1;
  for (int col = 0; col < 4; ++col) {
    int pivot = -1;
    for (int row = col; row < 4; ++row) {
      if (m[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int row = col + 1; row < 4; ++row) {
      if (m[row][col] == 0) continue;
      const Rational factor = m[row][col] / m[col][col];
      for (int k = col; k < 4; ++k) m[row][k] -= factor * m[col][k];
    }
  }
  return det;
}

NonOrthogonalityReport verify_nonorthogonality(const std::vector<Rational>& a_samples) {
  NonOrthogonalityReport report;
  for (std::size_t i = 0; i < a_samples.size(); ++i)
    for (std::size_t j = i + 1; j < a_samples.size(); ++j)
      if (a_samples[i] == a_samples[j])
        throw std::invalid_argument("resultant samples must be distinct");

  const DensePoly x = DensePoly::monomial(1, 1);
  bool identity = true;
  for (const auto& a : a_samples) {
    const auto r = elephant_sequence(4, a);
    ResultantSample s;
    s.a = a;
    s.defect = r[3] - (a + 1) * (x * r[2]);
    if (s.defect.size() > 3) {
      report.failures.push_back("R_4 - (a+1)xR_3 has degree > 2 at a = " + to_string(a));
      continue;
    }
    s.resultant = sylvester_resultant_quadratic(s.defect, r[1]);
    s.expected = pow(a, 4) * pow(Rational(a - 1), 2) / 9;
    s.matches = s.resultant == s.expected;
    s.orthogonal_case = s.resultant == 0;
    if (!s.matches) {
      report.failures.push_back("resultant mismatch at a = " + to_string(a) + ": got " +
                                to_string(s.resultant) + ", expected " + to_string(s.expected));
    }

    // R_0 = 1: R_2 = (a+1)x R_1 - a R_0 and R_3 = (a+1)x R_2 - a R_1.
    const DensePoly r0 = DensePoly::constant(1);
    const bool n1 = r[1] == (a + 1) * (x * r[0]) - a * r0;
    const bool n2 = r[2] == (a + 1) * (x * r[1]) - a * r[0];
    if (!(n1 && n2)) {
      identity = false;
      report.failures.push_back("three-term identity fails for n = 1 or 2 at a = " + to_string(a));
    }
    report.samples.push_back(std::move(s));
  }
  report.low_order_identity_holds = identity && !a_samples.empty();
  return report;
}

}  // namespace elephant
