#pragma once

// Eulerian numbers A(n,k), the triangle T(n,k) (OEIS A101280) with its row
// polynomials U_n(y), and the identities linking them.

#include "elephant/ratpoly.hpp"

#include <iosfwd>
#include <stdexcept>
#include <vector>

namespace elephant {

class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Rows A(n, 1..n) for n = 1..max_n, built with
///   A(n,k) = k A(n-1,k) + (n-k+1) A(n-1,k-1).
class EulerianTable {
 public:
  explicit EulerianTable(unsigned max_n);

  [[nodiscard]] unsigned max_n() const { return static_cast<unsigned>(rows_.size()); }
  /// Throws std::out_of_range unless 1 <= k <= n <= max_n().
  [[nodiscard]] const Integer& at(unsigned n, unsigned k) const;
  [[nodiscard]] const std::vector<Integer>& row(unsigned n) const;

 private:
  std::vector<std::vector<Integer>> rows_;
};

Integer eulerian(unsigned n, unsigned k);

/// sum_{k=0}^{n} (-1)^k (n-k)^{2n-1} C(2n,k), the central value A(2n-1, n).
Integer central_eulerian_altsum(unsigned n);

/// T(1,0) = 1, T(n,k) = (k+1) T(n-1,k) + (2n-4k) T(n-1,k-1);
/// zero outside 0 <= k <= floor((n-1)/2).
class TriangleT {
 public:
  explicit TriangleT(unsigned max_n);

  [[nodiscard]] unsigned max_n() const { return static_cast<unsigned>(rows_.size()); }
  [[nodiscard]] Integer at(unsigned n, int k) const;
  [[nodiscard]] const std::vector<Integer>& row(unsigned n) const;

 private:
  std::vector<std::vector<Integer>> rows_;
};

Integer triangle_T(unsigned n, int k);

/// U_n(y) = sum_k T(n,k) y^k.
DensePoly u_poly(unsigned n);

/// U_1 = 1, U_n = (2ny + 1 - 4y) U_{n-1} + y(1 - 4y) U_{n-1}'.
DensePoly u_poly_by_recurrence(unsigned n);

/// A_n(x) = sum_k A(n,k+1) x^k.
DensePoly eulerian_poly(unsigned n);

/// (1+x)^{2n-2} U_{2n-1}(x/(1+x)^2); a polynomial because deg U_{2n-1} <= n-1.
DensePoly u_to_eulerian_lhs(unsigned n);

/// Coefficientwise comparison of u_to_eulerian_lhs(n) with A_{2n-1}(x).
bool verify_U_A_identity(unsigned n);

/// |sum_{n=1}^{N} U_n(y) z^n/n! - [C(y)(2-C(y))/(exp(-z sqrt(1-4y)) + 1 - C(y)) - C(y)]|
/// in double precision, C the Catalan generating function. Throws DomainError
/// unless |y| < 1/4 and N >= 1.
double verify_U_gf(const Rational& y, double z, unsigned terms);

/// OEIS b-file style "index value" lines for the flattened triangles.
void write_bfile_triangle_T(std::ostream& out, unsigned max_n);
void write_bfile_eulerian(std::ostream& out, unsigned max_n);
void write_bfile_central_eulerian(std::ostream& out, unsigned max_n);

}  // namespace elephant
