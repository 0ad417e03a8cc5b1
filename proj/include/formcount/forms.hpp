#pragma once

// Binary forms a_0 x^n + a_1 x^(n-1) y + ... + a_n y^n over GF(p), taken up to
// nonzero scalars, with the right action of GL(2,p) by linear substitution:
//   (f g)(x, y) = f(a x + b y, c x + d y)   for g = [[a,b],[c,d]].

#include "formcount/finitefield.hpp"
#include "formcount/matrix.hpp"

#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace formcount {

inline constexpr std::uint64_t kDefaultEnumerationBound = 2'000'000;

namespace detail {

inline std::vector<std::uint64_t> mul_raw(const PrimeField& f, std::span<const std::uint64_t> a,
                                          std::span<const std::uint64_t> b) {
  std::vector<std::uint64_t> c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = f.add(c[i + j], f.mul(a[i], b[j]));
  }
  return c;
}

// Coefficients (indexed by the power of y) of (s x + t y)^k.
inline std::vector<std::uint64_t> linear_power(const PrimeField& f, std::uint64_t s, std::uint64_t t,
                                               unsigned k) {
  std::vector<std::uint64_t> binom{1};
  for (unsigned r = 1; r <= k; ++r) {
    std::vector<std::uint64_t> next(r + 1, 1);
    for (unsigned j = 1; j < r; ++j) next[j] = f.add(binom[j - 1], binom[j]);
    binom = std::move(next);
  }
  std::vector<std::uint64_t> out(k + 1);
  for (unsigned j = 0; j <= k; ++j) out[j] = f.mul(binom[j], f.mul(f.pow(s, k - j), f.pow(t, j)));
  return out;
}

}  // namespace detail

class BinaryForm {
 public:
  /// coeffs[i] multiplies x^(n-i) y^i; stored scaled so the first nonzero entry is 1.
  BinaryForm(const PrimeField& field, std::vector<std::uint64_t> coeffs) : f_(field), c_(std::move(coeffs)) {
    if (c_.size() < 2) throw std::invalid_argument("BinaryForm: degree must be >= 1");
    for (auto& v : c_) v %= f_.p();
    normalize();
  }

  const PrimeField& field() const { return f_; }
  std::uint64_t p() const { return f_.p(); }
  unsigned degree() const { return static_cast<unsigned>(c_.size() - 1); }
  const std::vector<std::uint64_t>& coefficients() const { return c_; }
  std::uint64_t operator[](std::size_t i) const { return c_[i]; }

  /// f(x, 1), as an ascending-degree polynomial.
  Polynomial<PrimeField> dehomogenize() const { return Polynomial<PrimeField>(f_, {c_.rbegin(), c_.rend()}); }

  std::string to_string() const {
    const unsigned n = degree();
    std::string out;
    for (unsigned i = 0; i <= n; ++i) {
      if (c_[i] == 0) continue;
      if (!out.empty()) out += "+";
      if (c_[i] != 1) out += std::to_string(c_[i]);
      if (n - i >= 1) out += "x";
      if (n - i >= 2) out += "^" + std::to_string(n - i);
      if (i >= 1) out += "y";
      if (i >= 2) out += "^" + std::to_string(i);
    }
    return out;
  }

  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
  friend std::strong_ordering operator<=>(const BinaryForm& a, const BinaryForm& b) {
    if (auto c = a.f_.p() <=> b.f_.p(); c != 0) return c;
    return a.c_ <=> b.c_;
  }

 private:
  void normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) throw std::invalid_argument("BinaryForm: all coefficients are zero");
    if (c_[lead] == 1) return;
    const auto inv = f_.inv(c_[lead]);
    for (auto& v : c_) v = f_.mul(v, inv);
  }

  PrimeField f_;
  std::vector<std::uint64_t> c_;
};

inline BinaryForm multiply(const BinaryForm& a, const BinaryForm& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("multiply: forms over different fields");
  return {a.field(), detail::mul_raw(a.field(), a.coefficients(), b.coefficients())};
}

/// g^k, expanded and normalized.
inline BinaryForm power_form(const BinaryForm& g, unsigned k) {
  if (k == 0) throw std::invalid_argument("power_form: exponent must be >= 1");
  BinaryForm out = g;
  for (unsigned i = 1; i < k; ++i) out = multiply(out, g);
  return out;
}

/// The linear map induced by g on degree-n forms, precomputed once.
class Substitution {
 public:
  Substitution(const Mat2& g, unsigned n) : f_(g.field()), n_(n), col_((n + 1) * (n + 1)) {
    if (n == 0) throw std::invalid_argument("Substitution: degree must be >= 1");
    for (unsigned i = 0; i <= n; ++i) {
      const auto row = detail::mul_raw(f_, detail::linear_power(f_, g.a(), g.b(), n - i),
                                       detail::linear_power(f_, g.c(), g.d(), i));
      for (unsigned j = 0; j <= n; ++j) col_[j * (n + 1) + i] = row[j];
    }
  }

  unsigned degree() const { return n_; }

  BinaryForm apply(const BinaryForm& form) const {
    check(form);
    std::vector<std::uint64_t> out(n_ + 1);
    for (unsigned j = 0; j <= n_; ++j) out[j] = image(form, j);
    return {f_, std::move(out)};
  }

  /// True when form g is a scalar multiple of form.
  bool fixes(const BinaryForm& form) const {
    check(form);
    const auto& c = form.coefficients();
    unsigned lead = 0;
    while (c[lead] == 0) ++lead;
    const auto lambda = image(form, lead);
    if (lambda == 0) return false;
    for (unsigned j = 0; j <= n_; ++j) {
      if (j != lead && image(form, j) != f_.mul(lambda, c[j])) return false;
    }
    return true;
  }

 private:
  std::uint64_t image(const BinaryForm& form, unsigned j) const {
    const auto& c = form.coefficients();
    const std::uint64_t* col = &col_[j * (n_ + 1)];
    std::uint64_t acc = 0;
    for (unsigned i = 0; i <= n_; ++i) acc += c[i] * col[i] % f_.p();
    return acc % f_.p();
  }
  void check(const BinaryForm& form) const {
    if (!(form.field() == f_)) throw std::invalid_argument("act: prime mismatch between form and matrix");
    if (form.degree() != n_) throw std::invalid_argument("act: form degree does not match substitution");
  }

  PrimeField f_;
  unsigned n_;
  std::vector<std::uint64_t> col_;  // column-major (n+1)x(n+1)
};

inline BinaryForm act(const BinaryForm& f, const Mat2& g) { return Substitution(g, f.degree()).apply(f); }

/// Degree-1 forms count as irreducible; for n >= 2 the x^n coefficient must be
/// nonzero (otherwise y divides f) and f(x,1) irreducible.
inline bool is_irreducible_form(const BinaryForm& f) {
  if (f.degree() == 1) return true;
  if (f[0] == 0) return false;
  return is_irreducible(f.dehomogenize());
}

/// Monic irreducible polynomials of degree n over GF(p), as ascending
/// coefficient vectors, sorted by (c_{n-1}, ..., c_0).
inline std::vector<std::vector<std::uint64_t>> monic_irreducibles(const PrimeField& fp, unsigned n,
                                                                  std::uint64_t bound = kDefaultEnumerationBound) {
  const std::uint64_t p = fp.p();
  if (n == 0) throw std::invalid_argument("monic_irreducibles: degree must be >= 1");
  if (ipow(BigInt(p), n) > bound) {
    throw BoundExceeded("enumeration of degree " + std::to_string(n) + " over GF(" + std::to_string(p) +
                        ") exceeds bound " + std::to_string(bound));
  }
  std::uint64_t total = 1;
  for (unsigned i = 0; i < n; ++i) total *= p;

  // Sieve: mark every product of a monic irreducible of degree i <= n/2 with
  // an arbitrary monic cofactor of degree n - i.
  std::vector<bool> reducible(total, false);
  for (unsigned i = 1; 2 * i <= n; ++i) {
    const auto small = monic_irreducibles(fp, i, bound);
    const unsigned m = n - i;
    std::vector<std::uint64_t> g(m + 1, 0);
    g[m] = 1;
    std::uint64_t count = 1;
    for (unsigned k = 0; k < m; ++k) count *= p;
    for (std::uint64_t gi = 0; gi < count; ++gi) {
      for (const auto& h : small) {
        const auto prod = detail::mul_raw(fp, h, g);
        std::uint64_t idx = 0;
        for (unsigned k = n; k-- > 0;) idx = idx * p + prod[k];
        reducible[idx] = true;
      }
      for (unsigned k = 0; k < m; ++k) {
        if (++g[k] < p) break;
        g[k] = 0;
      }
    }
  }

  std::vector<std::vector<std::uint64_t>> out;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    if (reducible[idx]) continue;
    std::vector<std::uint64_t> c(n + 1);
    std::uint64_t v = idx;
    for (unsigned k = 0; k < n; ++k) {
      c[k] = v % p;
      v /= p;
    }
    c[n] = 1;
    out.push_back(std::move(c));
  }
  return out;
}

/// All normalized irreducible forms of degree n >= 2, in lexicographic order
/// of their coefficient rows.
inline std::vector<BinaryForm> enumerate_irreducible_forms(std::uint64_t p, unsigned n,
                                                           std::uint64_t bound = kDefaultEnumerationBound) {
  if (n < 2) throw std::invalid_argument("enumerate_irreducible_forms: degree must be >= 2");
  const PrimeField fp(p);
  std::vector<BinaryForm> out;
  for (auto& c : monic_irreducibles(fp, n, bound)) out.emplace_back(fp, std::vector<std::uint64_t>(c.rbegin(), c.rend()));
  return out;
}

/// (x^p - x y^(p-1))^(k-i) y^(ip) for i = 0..k, where n = k p.
inline std::vector<BinaryForm> transvection_fixed_basis(std::uint64_t p, unsigned n) {
  const PrimeField fp(p);
  if (n == 0 || n % p != 0) throw std::invalid_argument("transvection_fixed_basis: p must divide n");
  const unsigned k = n / static_cast<unsigned>(p);
  std::vector<std::uint64_t> t(p + 1, 0), y_p(p + 1, 0);
  t[0] = 1;
  t[p - 1] = fp.neg(1);
  y_p[p] = 1;
  std::vector<BinaryForm> out;
  for (unsigned i = 0; i <= k; ++i) {
    std::vector<std::uint64_t> c{1};
    for (unsigned j = 0; j < k - i; ++j) c = detail::mul_raw(fp, c, t);
    for (unsigned j = 0; j < i; ++j) c = detail::mul_raw(fp, c, y_p);
    out.emplace_back(fp, std::move(c));
  }
  return out;
}

}  // namespace formcount
