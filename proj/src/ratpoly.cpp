#include "elephant/ratpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace elephant {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }

  Rational value;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    auto num = body.substr(0, slash);
    auto den = body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) {
      throw ParseError("malformed rational: '" + std::string(text) + "'");
    }
    Integer d(std::string(den), 10);
    if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
    value = Rational(Integer(std::string(num), 10), d);
  } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
    auto whole = body.substr(0, dot);
    auto frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) {
      throw ParseError("malformed decimal: '" + std::string(text) + "'");
    }
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    Integer digits(std::string(whole) + std::string(frac), 10);
    value = Rational(digits, scale);
  } else {
    if (!all_digits(body)) throw ParseError("malformed rational: '" + std::string(text) + "'");
    value = Rational(Integer(std::string(body), 10));
  }
  value.canonicalize();
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) { return canonical(value).get_str(); }

Rational canonical(Rational value) {
  value.canonicalize();
  return value;
}

int sign(const Rational& value) { return sgn(value); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result;
  mpz_pow_ui(result.get_num_mpz_t(), base.get_num_mpz_t(), exponent);
  mpz_pow_ui(result.get_den_mpz_t(), base.get_den_mpz_t(), exponent);
  // coprime in, coprime out
  return result;
}

Integer factorial(unsigned n) {
  Integer result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

Integer binomial(unsigned n, unsigned k) {
  Integer result;
  mpz_bin_uiui(result.get_mpz_t(), n, k);
  return result;
}

// --- DensePoly --------------------------------------------------------------

DensePoly::DensePoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  for (auto& c : coeffs_)
    if (mpz_cmp_ui(c.get_den_mpz_t(), 1) != 0) c.canonicalize();
  trim();
}

DensePoly::DensePoly(std::initializer_list<Rational> coeffs)
    : DensePoly(std::vector<Rational>(coeffs)) {}

DensePoly DensePoly::constant(const Rational& c) { return DensePoly({c}); }

DensePoly DensePoly::monomial(const Rational& c, std::size_t power) {
  std::vector<Rational> coeffs(power + 1);
  coeffs[power] = c;
  return DensePoly(std::move(coeffs));
}

void DensePoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::optional<std::size_t> DensePoly::degree() const {
  if (coeffs_.empty()) return std::nullopt;
  return coeffs_.size() - 1;
}

Rational DensePoly::coeff(std::size_t power) const {
  return power < coeffs_.size() ? coeffs_[power] : Rational(0);
}

const Rational& DensePoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rational DensePoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

int DensePoly::sign_at(const Rational& x) const { return sgn(eval(x)); }

double DensePoly::eval_double(double x) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

DensePoly DensePoly::derivative(unsigned order) const {
  if (order == 0) return *this;
  if (coeffs_.size() <= order) return {};
  std::vector<Rational> out(coeffs_.size() - order);
  for (std::size_t j = 0; j < out.size(); ++j) {
    // falling factorial (j+order)!/j!
    Integer scale = 1;
    for (unsigned i = 1; i <= order; ++i) scale *= static_cast<unsigned long>(j + i);
    out[j] = coeffs_[j + order] * scale;
  }
  return DensePoly(std::move(out));
}

DensePoly DensePoly::monic() const {
  if (is_zero()) return {};
  return *this * Rational(1 / leading());
}

DensePoly DensePoly::abs_normalized() const {
  if (is_zero()) return {};
  return *this * Rational(1 / abs(leading()));
}

DensePoly& DensePoly::operator+=(const DensePoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

DensePoly& DensePoly::operator-=(const DensePoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

DensePoly& DensePoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= scalar;
  return *this;
}

DensePoly operator-(const DensePoly& p) { return p * Rational(-1); }

DensePoly operator*(const DensePoly& lhs, const DensePoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<Rational> out(lhs.size() + rhs.size() - 1);
  for (std::size_t i = 0; i < lhs.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return DensePoly(std::move(out));
}

DensePoly::DivResult DensePoly::divmod(const DensePoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rational> rem = coeffs_;
  const std::size_t dd = divisor.size() - 1;
  if (rem.size() <= dd) return {DensePoly{}, *this};

  std::vector<Rational> quot(rem.size() - dd);
  const Rational inv_lead = 1 / divisor.leading();
  for (std::size_t k = rem.size(); k-- > dd;) {
    if (rem[k] == 0) continue;
    Rational q = rem[k] * inv_lead;
    for (std::size_t j = 0; j <= dd; ++j) rem[k - dd + j] -= q * divisor.coeffs_[j];
    quot[k - dd] = std::move(q);
  }
  rem.resize(dd);
  return {DensePoly(std::move(quot)), DensePoly(std::move(rem))};
}

DensePoly pow(const DensePoly& base, unsigned exponent) {
  DensePoly result = DensePoly::constant(1);
  DensePoly square = base;
  while (exponent != 0) {
    if ((exponent & 1U) != 0) result = result * square;
    exponent >>= 1U;
    if (exponent != 0) square = square * square;
  }
  return result;
}

DensePoly gcd(DensePoly lhs, DensePoly rhs) {
  while (!rhs.is_zero()) {
    DensePoly r = lhs.divmod(rhs).remainder;
    lhs = std::move(rhs);
    rhs = r.monic();
  }
  return lhs.monic();
}

DensePoly interpolate(std::span<const Rational> nodes, std::span<const Rational> values) {
  if (nodes.size() != values.size()) throw std::invalid_argument("interpolate: size mismatch");
  DensePoly result;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    DensePoly basis = DensePoly::constant(1);
    Rational denom = 1;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      if (j == i) continue;
      if (nodes[i] == nodes[j]) throw std::invalid_argument("interpolate: repeated node");
      basis = basis * DensePoly({Rational(-nodes[j]), Rational(1)});
      denom *= nodes[i] - nodes[j];
    }
    result += basis * Rational(values[i] / denom);
  }
  return result;
}

std::string to_string(const DensePoly& p, char var) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = p.size(); k-- > 0;) {
    const Rational& c = p.coeffs()[k];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == 1;
    if (!unit || k == 0) out << mag.get_str();
    if (k > 0) {
      if (!unit) out << '*';
      out << var;
      if (k > 1) out << '^' << k;
    }
  }
  return out.str();
}

// --- LaurentPoly ------------------------------------------------------------

void LaurentPoly::add(int exponent, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Rational LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool LaurentPoly::is_symmetric() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [this](const auto& kv) { return coeff(-kv.first) == kv.second; });
}

Rational LaurentPoly::coeff_sum() const {
  Rational total = 0;
  for (const auto& [k, c] : terms_) total += c;
  return total;
}

LaurentPoly operator*(const LaurentPoly& lhs, const LaurentPoly& rhs) {
  LaurentPoly out;
  for (const auto& [i, ci] : lhs.terms_)
    for (const auto& [j, cj] : rhs.terms_) out.add(i + j, ci * cj);
  return out;
}

LaurentPoly cos_substitution(const DensePoly& p) {
  // x^j -> 2^{-j} sum_m C(j, m) z^{j - 2m}
  LaurentPoly out;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const Rational& c = p.coeffs()[j];
    if (c == 0) continue;
    Rational scale = c;
    mpz_mul_2exp(scale.get_den_mpz_t(), scale.get_den_mpz_t(), j);
    scale.canonicalize();
    const auto jj = static_cast<unsigned>(j);
    for (unsigned m = 0; m <= jj; ++m) {
      out.add(static_cast<int>(jj) - 2 * static_cast<int>(m), scale * binomial(jj, m));
    }
  }
  return out;
}

// --- PowerSeries ------------------------------------------------------------

PowerSeries::PowerSeries(unsigned order) : coeffs_(order + 1) {}

PowerSeries::PowerSeries(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw std::invalid_argument("power series needs at least one coefficient");
  for (auto& c : coeffs_) c.canonicalize();
}

PowerSeries PowerSeries::truncated(unsigned order) const {
  if (order > this->order()) throw std::invalid_argument("cannot extend a truncated series");
  return PowerSeries(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

PowerSeries operator+(const PowerSeries& lhs, const PowerSeries& rhs) {
  PowerSeries out(std::min(lhs.order(), rhs.order()));
  for (unsigned k = 0; k <= out.order(); ++k) out[k] = lhs[k] + rhs[k];
  return out;
}

PowerSeries operator-(const PowerSeries& lhs, const PowerSeries& rhs) {
  PowerSeries out(std::min(lhs.order(), rhs.order()));
  for (unsigned k = 0; k <= out.order(); ++k) out[k] = lhs[k] - rhs[k];
  return out;
}

PowerSeries operator*(const Rational& s, PowerSeries f) {
  for (auto& c : f.coeffs_) c *= s;
  return f;
}

PowerSeries series_expand(SeriesKind kind, const Rational& alpha, unsigned order) {
  PowerSeries out(order);
  switch (kind) {
    case SeriesKind::binomial_alpha:
      // c_{k+1} = c_k * (k - alpha) / (k + 1)
      out[0] = 1;
      for (unsigned k = 0; k < order; ++k) out[k + 1] = out[k] * (Rational(k) - alpha) / (k + 1);
      break;
    case SeriesKind::log_one_minus:
      for (unsigned k = 1; k <= order; ++k) out[k] = Rational(-1, k);
      break;
    case SeriesKind::rational_x_over_1mx_sq:
      for (unsigned k = 1; k <= order; ++k) out[k] = k;
      break;
  }
  return out;
}

PowerSeries series_mul(const PowerSeries& f, const PowerSeries& g) {
  PowerSeries out(std::min(f.order(), g.order()));
  for (unsigned k = 0; k <= out.order(); ++k) {
    Rational acc = 0;
    for (unsigned i = 0; i <= k; ++i) {
      if (f[i] == 0) continue;
      acc += f[i] * g[k - i];
    }
    out[k] = acc;
  }
  return out;
}

}  // namespace elephant
