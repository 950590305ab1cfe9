#include "elephant/combinatorics.hpp"

#include <cmath>
#include <ostream>
#include <string>

namespace elephant {

EulerianTable::EulerianTable(unsigned max_n) {
  rows_.reserve(max_n);
  for (unsigned n = 1; n <= max_n; ++n) {
    std::vector<Integer> row(n);
    row[0] = 1;
    for (unsigned k = 2; k <= n; ++k) {
      const auto& prev = rows_.back();
      Integer same = k <= n - 1 ? Integer(k * prev[k - 1]) : Integer(0);
      row[k - 1] = same + (n - k + 1) * prev[k - 2];
    }
    rows_.push_back(std::move(row));
  }
}

const Integer& EulerianTable::at(unsigned n, unsigned k) const {
  if (n < 1 || n > max_n() || k < 1 || k > n) {
    throw std::out_of_range("Eulerian index out of range: A(" + std::to_string(n) + "," +
                            std::to_string(k) + ")");
  }
  return rows_[n - 1][k - 1];
}

const std::vector<Integer>& EulerianTable::row(unsigned n) const {
  if (n < 1 || n > max_n()) throw std::out_of_range("Eulerian row out of range");
  return rows_[n - 1];
}

Integer eulerian(unsigned n, unsigned k) {
  if (n < 1 || k < 1 || k > n) {
    throw std::out_of_range("Eulerian index out of range: A(" + std::to_string(n) + "," +
                            std::to_string(k) + ")");
  }
  return EulerianTable(n).at(n, k);
}

Integer central_eulerian_altsum(unsigned n) {
  Integer total = 0;
  for (unsigned k = 0; k <= n; ++k) {
    Integer power;
    mpz_ui_pow_ui(power.get_mpz_t(), n - k, 2 * n - 1);
    Integer term = power * binomial(2 * n, k);
    if (k % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

// --- T(n,k) -----------------------------------------------------------------

TriangleT::TriangleT(unsigned max_n) {
  rows_.reserve(max_n);
  for (unsigned n = 1; n <= max_n; ++n) {
    std::vector<Integer> row((n - 1) / 2 + 1);
    if (n == 1) {
      row[0] = 1;
    } else {
      const auto& prev = rows_.back();
      auto prev_at = [&prev](int k) {
        return k >= 0 && static_cast<std::size_t>(k) < prev.size() ? prev[k] : Integer(0);
      };
      for (int k = 0; k < static_cast<int>(row.size()); ++k) {
        row[k] = (k + 1) * prev_at(k) + (2 * static_cast<long>(n) - 4L * k) * prev_at(k - 1);
      }
    }
    rows_.push_back(std::move(row));
  }
}

Integer TriangleT::at(unsigned n, int k) const {
  if (n < 1 || n > max_n()) throw std::out_of_range("triangle row out of range");
  const auto& r = rows_[n - 1];
  return k >= 0 && static_cast<std::size_t>(k) < r.size() ? r[k] : Integer(0);
}

const std::vector<Integer>& TriangleT::row(unsigned n) const {
  if (n < 1 || n > max_n()) throw std::out_of_range("triangle row out of range");
  return rows_[n - 1];
}

Integer triangle_T(unsigned n, int k) {
  if (n < 1) throw std::out_of_range("triangle row index must be positive");
  return TriangleT(n).at(n, k);
}

DensePoly u_poly(unsigned n) {
  if (n < 1) throw std::out_of_range("U_n needs n >= 1");
  const auto row = TriangleT(n).row(n);
  return DensePoly(std::vector<Rational>(row.begin(), row.end()));
}

DensePoly u_poly_by_recurrence(unsigned n) {
  if (n < 1) throw std::out_of_range("U_n needs n >= 1");
  const DensePoly y = DensePoly::monomial(1, 1);
  const DensePoly y_one_minus_4y({0, 1, -4});
  DensePoly u = DensePoly::constant(1);
  for (unsigned m = 2; m <= n; ++m) {
    DensePoly factor({1, Rational(2 * static_cast<long>(m) - 4)});
    u = factor * u + y_one_minus_4y * u.derivative();
  }
  return u;
}

DensePoly eulerian_poly(unsigned n) {
  if (n < 1) throw std::out_of_range("A_n needs n >= 1");
  const auto row = EulerianTable(n).row(n);
  return DensePoly(std::vector<Rational>(row.begin(), row.end()));
}

DensePoly u_to_eulerian_lhs(unsigned n) {
  if (n < 1) throw std::out_of_range("identity needs n >= 1");
  // (1+x)^{2n-2} * sum_k T_k x^k (1+x)^{-2k} = sum_k T_k x^k (1+x)^{2n-2-2k}
  const DensePoly u = u_poly(2 * n - 1);
  const DensePoly one_plus_x({1, 1});
  DensePoly lhs;
  for (std::size_t k = 0; k < u.size(); ++k) {
    lhs += DensePoly::monomial(u.coeffs()[k], k) *
           pow(one_plus_x, 2 * n - 2 - 2 * static_cast<unsigned>(k));
  }
  return lhs;
}

bool verify_U_A_identity(unsigned n) { return u_to_eulerian_lhs(n) == eulerian_poly(2 * n - 1); }

double verify_U_gf(const Rational& y, double z, unsigned terms) {
  if (abs(y) >= Rational(1, 4)) throw DomainError("generating function needs |y| < 1/4");
  if (terms < 1) throw DomainError("generating function needs at least one term");

  const double yd = y.get_d();
  const double root = std::sqrt(1.0 - 4.0 * yd);
  const double catalan = y == 0 ? 1.0 : (1.0 - root) / (2.0 * yd);

  double left = 0.0;
  double z_pow_over_fact = 1.0;
  const TriangleT table(terms);
  for (unsigned n = 1; n <= terms; ++n) {
    z_pow_over_fact *= z / static_cast<double>(n);
    double u = 0.0;
    const auto& row = table.row(n);
    for (auto it = row.rbegin(); it != row.rend(); ++it) u = u * yd + it->get_d();
    left += u * z_pow_over_fact;
  }
  const double right =
      catalan * (2.0 - catalan) / (std::exp(-z * root) + 1.0 - catalan) - catalan;
  return std::abs(left - right);
}

void write_bfile_triangle_T(std::ostream& out, unsigned max_n) {
  const TriangleT table(max_n);
  unsigned index = 1;
  for (unsigned n = 1; n <= max_n; ++n)
    for (const auto& v : table.row(n)) out << index++ << ' ' << v.get_str() << '\n';
}

void write_bfile_eulerian(std::ostream& out, unsigned max_n) {
  const EulerianTable table(max_n);
  unsigned index = 1;
  for (unsigned n = 1; n <= max_n; ++n)
    for (const auto& v : table.row(n)) out << index++ << ' ' << v.get_str() << '\n';
}

void write_bfile_central_eulerian(std::ostream& out, unsigned max_n) {
  if (max_n == 0) return;
  const EulerianTable table(2 * max_n - 1);
  for (unsigned n = 1; n <= max_n; ++n) out << n << ' ' << table.at(2 * n - 1, n).get_str() << '\n';
}

}  // namespace elephant
