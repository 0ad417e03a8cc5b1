#pragma once

// Orbit counts as polynomials in p, one per residue class of p mod n.
//
// For p = r (mod n) with gcd(r, n) = 1 the Burnside terms only depend on
// which divisors e of n divide p - 1 (r = 1 mod e) or p + 1 (r = -1 mod e),
// and the transvection term vanishes, so each class assembles into a single
// rational polynomial divided by |GL(2,p)| = p (p+1) (p-1)^2.

#include "formcount/counting.hpp"
#include "formcount/numtheory.hpp"

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace formcount {

/// Exact polynomial in the indeterminate p with rational coefficients.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

  static RationalPolynomial constant(const Rational& a) { return RationalPolynomial({a}); }
  static RationalPolynomial monomial(const Rational& a, std::size_t k) {
    std::vector<Rational> c(k + 1);
    c[k] = a;
    return RationalPolynomial(std::move(c));
  }
  static RationalPolynomial p() { return monomial(1, 1); }

  const std::vector<Rational>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rational operator[](std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  friend RationalPolynomial operator+(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] + b[i];
    return RationalPolynomial(std::move(c));
  }
  friend RationalPolynomial operator-(const RationalPolynomial& a, const RationalPolynomial& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a[i] - b[i];
    return RationalPolynomial(std::move(c));
  }
  friend RationalPolynomial operator*(const RationalPolynomial& a, const RationalPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return RationalPolynomial(std::move(c));
  }
  friend RationalPolynomial operator*(const Rational& s, const RationalPolynomial& a) {
    return RationalPolynomial::constant(s) * a;
  }
  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

  /// Quotient and remainder; the caller decides whether a remainder is acceptable.
  friend std::pair<RationalPolynomial, RationalPolynomial> divrem(const RationalPolynomial& a,
                                                                  const RationalPolynomial& b) {
    if (b.is_zero()) throw std::domain_error("RationalPolynomial: division by the zero polynomial");
    std::vector<Rational> r = a.c_;
    const std::size_t db = b.c_.size() - 1;
    if (r.size() <= db) return {RationalPolynomial(), a};
    std::vector<Rational> q(r.size() - db);
    for (std::size_t i = r.size(); i-- > db;) {
      const Rational coef = r[i] / b.c_.back();
      q[i - db] = coef;
      for (std::size_t j = 0; j <= db; ++j) r[i - db + j] -= coef * b.c_[j];
    }
    r.resize(db);
    return {RationalPolynomial(std::move(q)), RationalPolynomial(std::move(r))};
  }

  Rational evaluate(const Rational& x) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  /// Least common denominator of the coefficients.
  BigInt common_denominator() const {
    BigInt den = 1;
    for (const auto& c : c_) den = boost::multiprecision::lcm(den, BigInt(boost::multiprecision::denominator(c)));
    return den;
  }

  /// Integer coefficients of common_denominator() * f, ascending.
  std::vector<BigInt> scaled_numerator() const {
    const BigInt den = common_denominator();
    std::vector<BigInt> out;
    for (const auto& c : c_) out.push_back(to_integer(c * Rational(den), "scaled_numerator"));
    return out;
  }

  /// Rendering such as "(p^2+9)/5", "(p+1)/2" or "1".
  std::string to_string() const {
    if (is_zero()) return "0";
    const BigInt den = common_denominator();
    const auto num = scaled_numerator();
    std::string out;
    int terms = 0;
    for (std::size_t i = num.size(); i-- > 0;) {
      const BigInt& c = num[i];
      if (c == 0) continue;
      ++terms;
      const BigInt mag = abs(c);
      if (c < 0) {
        out += "-";
      } else if (!out.empty()) {
        out += "+";
      }
      if (mag != 1 || i == 0) out += mag.str();
      if (i >= 1) out += "p";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    if (den == 1) return out;
    return (terms > 1 ? "(" + out + ")" : out) + "/" + den.str();
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  std::vector<Rational> c_;
};

struct PorcTable {
  std::int64_t n;
  std::map<std::int64_t, RationalPolynomial> classes;  // residue r -> orbit count
};

namespace detail {

inline RationalPolynomial p_pow(std::int64_t k) { return RationalPolynomial::monomial(1, static_cast<std::size_t>(k)); }

inline RationalPolynomial count_S_poly(std::int64_t n) {
  RationalPolynomial s;
  for (auto d : divisors(n)) {
    if (int mu = mobius(d); mu != 0) s = s + Rational(mu) * p_pow(n / d);
  }
  return Rational(1, n) * s;
}

inline RationalPolynomial func_A_poly(std::int64_t n, std::int64_t e) {
  const auto s = kr_split(n, e);
  RationalPolynomial sum;
  for (auto d : divisors(s.k)) {
    if (int mu = mobius(d); mu != 0) sum = sum + Rational(mu) * (p_pow(s.k * s.r / d) - RationalPolynomial::constant(1));
  }
  return Rational(euler_phi(e), n) * sum;
}

// The parity term 2 (rd mod 2) does not depend on p and folds into the constant.
inline RationalPolynomial func_C_poly(std::int64_t n, std::int64_t e) {
  const auto s = kr_split(n, e);
  RationalPolynomial sum;
  for (auto d : divisors(s.k)) {
    const int mu = mobius(s.k / d);
    if (mu == 0) continue;
    const std::int64_t rd = s.r * d;
    sum = sum + Rational(mu) * (p_pow(rd) + RationalPolynomial::constant(-1 + 2 * (rd % 2)));
  }
  return Rational(euler_phi(e), n) * sum;
}

}  // namespace detail

/// p (p+1) (p-1)^2, the order of GL(2,p).
inline RationalPolynomial gl2_order_poly() {
  const auto p = RationalPolynomial::p();
  const auto one = RationalPolynomial::constant(1);
  return p * (p + one) * (p - one) * (p - one);
}

/// Orbit-count polynomial for primes p = r (mod n), gcd(r, n) = 1.
inline RationalPolynomial porc_polynomial(std::int64_t n, std::int64_t r) {
  if (n < 3) throw std::invalid_argument("porc_polynomial: n must be >= 3");
  r = ((r % n) + n) % n;
  if (std::gcd(r, n) != 1) throw std::invalid_argument("porc_polynomial: residue must be coprime to n");
  const auto p = RationalPolynomial::p();
  const auto one = RationalPolynomial::constant(1);
  const auto half_pm1 = Rational(1, 2) * (p - one);

  RationalPolynomial total = (p - one) * detail::count_S_poly(n);
  for (auto e : divisors(n)) {
    if (e == 1) continue;
    const auto phi = Rational(euler_phi(e));
    if (r % e == 1 % e) total = total + phi * half_pm1 * (p * p + p) * detail::func_A_poly(n, e);
    if ((r + 1) % e == 0) total = total + phi * half_pm1 * (p * p - p) * detail::func_C_poly(n, e);
  }
  auto [quotient, remainder] = divrem(total, gl2_order_poly());
  if (!remainder.is_zero()) {
    throw InvariantViolation("porc_polynomial: nonzero remainder " + remainder.to_string() + " for n=" +
                             std::to_string(n) + ", r=" + std::to_string(r));
  }
  return quotient;
}

inline PorcTable porc_table(std::int64_t n) {
  if (n < 3) throw std::invalid_argument("porc_table: n must be >= 3");
  PorcTable table{n, {}};
  for (std::int64_t r = 1; r < n; ++r) {
    if (std::gcd(r, n) == 1) table.classes.emplace(r, porc_polynomial(n, r));
  }
  return table;
}

}  // namespace formcount
