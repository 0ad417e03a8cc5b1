#pragma once

// Arithmetic in GF(p) and GF(p^m), dense univariate polynomials over either,
// and Rabin's irreducibility test.
//
// Both field types share one interface (the FiniteField concept): elements are
// plain std::uint64_t values and every operation goes through the field
// descriptor. Extension elements are packed as sum c_i p^i, where c_i is the
// coefficient of u^i in GF(p)[u]/(modulus); coefficients() unpacks them.

#include "formcount/numtheory.hpp"

#include <concepts>
#include <cstdint>
#include <limits>
#include <memory>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace formcount {

template <class F>
concept FiniteField = std::equality_comparable<F> && requires(const F& f, std::uint64_t a, std::uint64_t b) {
  { f.characteristic() } -> std::convertible_to<std::uint64_t>;
  { f.order() } -> std::convertible_to<std::uint64_t>;
  { f.add(a, b) } -> std::same_as<std::uint64_t>;
  { f.sub(a, b) } -> std::same_as<std::uint64_t>;
  { f.neg(a) } -> std::same_as<std::uint64_t>;
  { f.mul(a, b) } -> std::same_as<std::uint64_t>;
  { f.inv(a) } -> std::same_as<std::uint64_t>;
  { f.from_int(std::int64_t{}) } -> std::same_as<std::uint64_t>;
};

class PrimeField {
 public:
  using element = std::uint64_t;

  explicit PrimeField(std::uint64_t p) : p_(p) {
    if (p > std::numeric_limits<std::uint32_t>::max() || !is_prime(static_cast<std::int64_t>(p))) {
      throw std::invalid_argument("PrimeField: " + std::to_string(p) + " is not a supported prime");
    }
  }

  std::uint64_t p() const { return p_; }
  std::uint64_t characteristic() const { return p_; }
  std::uint64_t order() const { return p_; }
  unsigned degree() const { return 1; }

  element zero() const { return 0; }
  element one() const { return 1; }
  element from_int(std::int64_t v) const {
    const auto m = static_cast<std::int64_t>(p_);
    return static_cast<element>(((v % m) + m) % m);
  }

  element add(element a, element b) const {
    const element s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  element sub(element a, element b) const { return a >= b ? a - b : a + p_ - b; }
  element neg(element a) const { return a == 0 ? 0 : p_ - a; }
  element mul(element a, element b) const { return a * b % p_; }
  element pow(element a, std::uint64_t k) const { return powmod(a, k, p_); }
  element inv(element a) const {
    if (a % p_ == 0) throw std::domain_error("PrimeField: inverse of zero");
    return powmod(a, p_ - 2, p_);
  }

  std::vector<element> coefficients(element a) const { return {a}; }

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  std::uint64_t p_;
};

/// Dense polynomial with coefficients in ascending degree; no trailing zeros.
template <FiniteField F>
class Polynomial {
 public:
  using element = std::uint64_t;
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  explicit Polynomial(F field) : field_(std::move(field)) {}
  Polynomial(F field, std::vector<element> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(const F& field, element a) { return Polynomial(field, {a}); }
  static Polynomial monomial(const F& field, element a, std::size_t k) {
    std::vector<element> c(k + 1, field.zero());
    c[k] = a;
    return Polynomial(field, std::move(c));
  }
  static Polynomial x(const F& field) { return monomial(field, field.one(), 1); }

  const F& field() const { return field_; }
  const std::vector<element>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return c_.empty() ? kZeroDegree : static_cast<int>(c_.size()) - 1; }
  element leading() const { return c_.empty() ? field_.zero() : c_.back(); }
  element operator[](std::size_t i) const { return i < c_.size() ? c_[i] : field_.zero(); }
  bool is_monic() const { return !c_.empty() && c_.back() == field_.one(); }

  Polynomial monic() const {
    if (is_zero()) return *this;
    const element inv = field_.inv(leading());
    std::vector<element> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = field_.mul(c_[i], inv);
    return Polynomial(field_, std::move(c));
  }

  element evaluate(element t) const {
    element acc = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, t), *it);
    return acc;
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    a.check_same(b);
    std::vector<element> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_.add(a[i], b[i]);
    return Polynomial(a.field_, std::move(c));
  }

  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    a.check_same(b);
    std::vector<element> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.field_.sub(a[i], b[i]);
    return Polynomial(a.field_, std::move(c));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_same(b);
    if (a.is_zero() || b.is_zero()) return Polynomial(a.field_);
    std::vector<element> c(a.c_.size() + b.c_.size() - 1, a.field_.zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        c[i + j] = a.field_.add(c[i + j], a.field_.mul(a.c_[i], b.c_[j]));
      }
    }
    return Polynomial(a.field_, std::move(c));
  }

  Polynomial scaled(element s) const {
    std::vector<element> c(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] = field_.mul(c_[i], s);
    return Polynomial(field_, std::move(c));
  }

  /// Quotient and remainder of a by b.
  friend std::pair<Polynomial, Polynomial> divrem(const Polynomial& a, const Polynomial& b) {
    a.check_same(b);
    if (b.is_zero()) throw std::domain_error("Polynomial: division by the zero polynomial");
    const F& f = a.field_;
    std::vector<element> r = a.c_;
    const std::size_t db = b.c_.size() - 1;
    if (r.size() <= db) return {Polynomial(f), a};
    std::vector<element> q(r.size() - db, f.zero());
    const element lead_inv = f.inv(b.leading());
    for (std::size_t i = r.size(); i-- > db;) {
      const element coef = f.mul(r[i], lead_inv);
      q[i - db] = coef;
      if (coef == 0) continue;
      for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(coef, b.c_[j]));
    }
    r.resize(db);
    return {Polynomial(f, std::move(q)), Polynomial(f, std::move(r))};
  }

  friend Polynomial operator%(const Polynomial& a, const Polynomial& m) { return divrem(a, m).second; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

  std::string to_string(char var = 'x') const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      if (!out.empty()) out += " + ";
      if (c_[i] != 1 || i == 0) out += std::to_string(c_[i]);
      if (i >= 1) out += var;
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == field_.zero()) c_.pop_back();
  }
  void check_same(const Polynomial& other) const {
    if (!(field_ == other.field_)) throw std::invalid_argument("Polynomial: operands over different fields");
  }

  F field_;
  std::vector<element> c_;
};

/// Monic gcd; gcd(0,0) = 0.
template <FiniteField F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.is_zero()) {
    auto r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <FiniteField F>
Polynomial<F> poly_mul_mod(const Polynomial<F>& f, const Polynomial<F>& g, const Polynomial<F>& m) {
  if (m.is_zero()) throw std::domain_error("poly_mul_mod: zero modulus");
  return (f * g) % m;
}

template <FiniteField F>
Polynomial<F> poly_powmod(const Polynomial<F>& f, std::uint64_t k, const Polynomial<F>& m) {
  if (m.is_zero()) throw std::domain_error("poly_powmod: zero modulus");
  auto result = Polynomial<F>::constant(f.field(), f.field().one()) % m;
  auto base = f % m;
  while (k > 0) {
    if (k & 1U) result = (result * base) % m;
    k >>= 1U;
    if (k > 0) base = (base * base) % m;
  }
  return result;
}

/// Square-and-multiply with an arbitrary-precision exponent.
template <FiniteField F>
Polynomial<F> poly_powmod(const Polynomial<F>& f, const BigInt& k, const Polynomial<F>& m) {
  if (m.is_zero()) throw std::domain_error("poly_powmod: zero modulus");
  if (k < 0) throw std::invalid_argument("poly_powmod: negative exponent");
  auto result = Polynomial<F>::constant(f.field(), f.field().one()) % m;
  if (k == 0) return result;
  const auto base = f % m;
  for (std::size_t bit = boost::multiprecision::msb(k) + 1; bit-- > 0;) {
    result = (result * result) % m;
    if (boost::multiprecision::bit_test(k, static_cast<unsigned>(bit))) result = (result * base) % m;
  }
  return result;
}

/// Rabin's test: f of degree n is irreducible over K = GF(q) iff
/// x^(q^n) = x mod f and gcd(x^(q^(n/r)) - x, f) = 1 for each prime r | n.
template <FiniteField F>
bool is_irreducible(const Polynomial<F>& f) {
  if (f.degree() < 1) throw std::invalid_argument("is_irreducible: polynomial must have degree >= 1");
  const int n = f.degree();
  const std::uint64_t q = f.field().order();
  const auto x = Polynomial<F>::x(f.field()) % f;
  const auto rs = prime_factors(n);

  std::vector<Polynomial<F>> frob;  // frob[i] = x^(q^i) mod f
  frob.reserve(static_cast<std::size_t>(n) + 1);
  frob.push_back(x);
  for (int i = 1; i <= n; ++i) frob.push_back(poly_powmod(frob.back(), q, f));
  if (!(frob[static_cast<std::size_t>(n)] == x)) return false;
  for (auto r : rs) {
    if (gcd(frob[static_cast<std::size_t>(n / r)] - x, f).degree() != 0) return false;
  }
  return true;
}

/// Number of monic irreducible polynomials of degree n over GF(p).
inline BigInt count_monic_irreducible(std::uint64_t p, std::int64_t n) {
  if (!is_prime(static_cast<std::int64_t>(p))) throw std::invalid_argument("count_monic_irreducible: p must be prime");
  detail::require_positive(n, "count_monic_irreducible");
  BigInt sum = 0;
  for (auto d : divisors(n)) {
    const int mu = mobius(d);
    if (mu != 0) sum += mu * ipow(BigInt(p), static_cast<std::uint64_t>(n / d));
  }
  return sum / n;
}

/// Lexicographically least monic irreducible of degree m over GF(p),
/// comparing (c_0, c_1, ..., c_{m-1}) with c_0 most significant.
inline Polynomial<PrimeField> least_irreducible(const PrimeField& fp, unsigned m) {
  if (m == 0) throw std::invalid_argument("least_irreducible: degree must be >= 1");
  const std::uint64_t p = fp.p();
  std::vector<std::uint64_t> c(m + 1, 0);
  c[m] = 1;
  if (m >= 2) c[0] = 1;  // c_0 = 0 means x divides
  while (true) {
    Polynomial<PrimeField> f(fp, c);
    if (is_irreducible(f)) return f;
    // odometer with c_{m-1} as the fastest digit
    std::size_t i = m;
    while (i-- > 0) {
      if (++c[i] < p) break;
      c[i] = 0;
      if (i == 0) throw InvariantViolation("least_irreducible: exhausted candidates");
    }
  }
}

/// GF(p^m) as GF(p)[u]/(modulus), with exp/log tables for multiplication.
class ExtensionField {
 public:
  using element = std::uint64_t;
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 24;

  ExtensionField(const PrimeField& base, const Polynomial<PrimeField>& modulus) {
    if (!(modulus.field() == base)) throw std::invalid_argument("ExtensionField: modulus over a different field");
    if (!modulus.is_monic() || modulus.degree() < 1) {
      throw std::invalid_argument("ExtensionField: modulus must be monic of degree >= 1");
    }
    if (!is_irreducible(modulus)) throw std::invalid_argument("ExtensionField: modulus is reducible");
    auto t = std::make_shared<Tables>(base);
    t->m = static_cast<unsigned>(modulus.degree());
    t->modulus = modulus.coefficients();
    BigInt q = ipow(BigInt(base.p()), t->m);
    if (q > kMaxOrder) throw std::invalid_argument("ExtensionField: field too large for table arithmetic");
    t->q = static_cast<std::uint64_t>(q);
    build_tables(*t);
    t_ = std::move(t);
  }

  /// The extension of degree m defined by the least irreducible modulus.
  static ExtensionField standard(std::uint64_t p, unsigned m) {
    PrimeField fp(p);
    return ExtensionField(fp, least_irreducible(fp, m));
  }

  const PrimeField& base() const { return t_->base; }
  unsigned degree() const { return t_->m; }
  std::uint64_t characteristic() const { return t_->base.p(); }
  std::uint64_t order() const { return t_->q; }
  Polynomial<PrimeField> modulus() const { return Polynomial<PrimeField>(t_->base, t_->modulus); }

  element zero() const { return 0; }
  element one() const { return 1; }
  element from_int(std::int64_t v) const { return t_->base.from_int(v); }
  /// The class of u, the adjoined root of the modulus.
  element generator_u() const { return t_->m == 1 ? t_->base.neg(t_->modulus[0]) : t_->base.p(); }

  element from_coefficients(std::span<const std::uint64_t> c) const {
    if (c.size() != t_->m) throw std::invalid_argument("ExtensionField: coefficient list has wrong length");
    element v = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
      if (c[i] >= t_->base.p()) throw std::invalid_argument("ExtensionField: coefficient not reduced");
      v = v * t_->base.p() + c[i];
    }
    return v;
  }
  std::vector<std::uint64_t> coefficients(element a) const {
    std::vector<std::uint64_t> c(t_->m);
    for (auto& ci : c) {
      ci = a % t_->base.p();
      a /= t_->base.p();
    }
    return c;
  }
  /// True when a lies in the prime subfield.
  bool in_base_field(element a) const { return a < t_->base.p(); }

  element add(element a, element b) const {
    const std::uint64_t p = t_->base.p();
    if (p == 2) return a ^ b;
    element out = 0, scale = 1;
    while (a != 0 || b != 0) {
      out += ((a % p + b % p) % p) * scale;
      a /= p;
      b /= p;
      scale *= p;
    }
    return out;
  }
  element neg(element a) const {
    const std::uint64_t p = t_->base.p();
    element out = 0, scale = 1;
    while (a != 0) {
      out += ((p - a % p) % p) * scale;
      a /= p;
      scale *= p;
    }
    return out;
  }
  element sub(element a, element b) const { return add(a, neg(b)); }
  element mul(element a, element b) const {
    if (a == 0 || b == 0) return 0;
    const std::uint64_t s = t_->log[a] + t_->log[b];
    return t_->exp[s >= t_->q - 1 ? s - (t_->q - 1) : s];
  }
  element inv(element a) const {
    if (a == 0) throw std::domain_error("ExtensionField: inverse of zero");
    const std::uint64_t l = t_->log[a];
    return t_->exp[l == 0 ? 0 : t_->q - 1 - l];
  }
  element pow(element a, std::uint64_t k) const {
    if (a == 0) return k == 0 ? 1 : 0;
    return t_->exp[static_cast<std::uint64_t>((static_cast<unsigned __int128>(t_->log[a]) * k) % (t_->q - 1))];
  }
  element frobenius(element a) const { return pow(a, t_->base.p()); }

  friend bool operator==(const ExtensionField& a, const ExtensionField& b) {
    return a.t_ == b.t_ || (a.t_->base == b.t_->base && a.t_->modulus == b.t_->modulus);
  }

 private:
  struct Tables {
    explicit Tables(const PrimeField& b) : base(b) {}
    PrimeField base;
    unsigned m = 0;
    std::uint64_t q = 0;
    std::vector<std::uint64_t> modulus;
    std::vector<std::uint32_t> exp;  // exp[i] = w^i, i < q - 1
    std::vector<std::uint32_t> log;  // log[w^i] = i; log[0] unused
  };

  // Multiplication by reduction of the coefficient product; used to build tables.
  static element slow_mul(const Tables& t, element a, element b) {
    const PrimeField& fp = t.base;
    auto unpack = [&](element v) {
      std::vector<std::uint64_t> c(t.m);
      for (auto& ci : c) {
        ci = v % fp.p();
        v /= fp.p();
      }
      return c;
    };
    const Polynomial<PrimeField> prod =
        (Polynomial<PrimeField>(fp, unpack(a)) * Polynomial<PrimeField>(fp, unpack(b))) %
        Polynomial<PrimeField>(fp, t.modulus);
    element v = 0;
    for (std::size_t i = t.m; i-- > 0;) v = v * fp.p() + prod[i];
    return v;
  }

  static void build_tables(Tables& t) {
    const std::uint64_t q = t.q;
    t.exp.assign(q - 1, 0);
    t.log.assign(q, 0);
    if (q == 2) {
      t.exp[0] = 1;
      return;
    }
    const auto qs = prime_factors(static_cast<std::int64_t>(q - 1));
    auto slow_pow = [&](element a, std::uint64_t k) {
      element r = 1;
      while (k > 0) {
        if (k & 1U) r = slow_mul(t, r, a);
        a = slow_mul(t, a, a);
        k >>= 1U;
      }
      return r;
    };
    for (element w = 2; w < q; ++w) {
      bool primitive = true;
      for (auto r : qs) {
        if (slow_pow(w, (q - 1) / static_cast<std::uint64_t>(r)) == 1) {
          primitive = false;
          break;
        }
      }
      if (!primitive) continue;
      element v = 1;
      for (std::uint64_t i = 0; i < q - 1; ++i) {
        t.exp[i] = static_cast<std::uint32_t>(v);
        t.log[v] = static_cast<std::uint32_t>(i);
        v = slow_mul(t, v, w);
      }
      return;
    }
    throw InvariantViolation("ExtensionField: no primitive element found");
  }

  std::shared_ptr<const Tables> t_;
};

/// A field element bundled with its field, for direct arithmetic.
template <FiniteField F>
class FieldElement {
 public:
  FieldElement(F field, std::uint64_t value) : field_(std::move(field)), v_(value) {}

  const F& field() const { return field_; }
  std::uint64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    return {a.field_, a.field_.add(a.v_, b.v_)};
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    return {a.field_, a.field_.sub(a.v_, b.v_)};
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    a.check_same(b);
    return {a.field_, a.field_.mul(a.v_, b.v_)};
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }
  FieldElement operator-() const { return {field_, field_.neg(v_)}; }
  FieldElement inverse() const { return {field_, field_.inv(v_)}; }
  FieldElement pow(std::uint64_t k) const { return {field_, field_.pow(v_, k)}; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.field_ == b.field_ && a.v_ == b.v_;
  }

 private:
  void check_same(const FieldElement& other) const {
    if (!(field_ == other.field_)) throw std::invalid_argument("FieldElement: operands from different fields");
  }

  F field_;
  std::uint64_t v_;
};

}  // namespace formcount
