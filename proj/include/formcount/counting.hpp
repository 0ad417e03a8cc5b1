#pragma once

// Closed-form orbit counting. Burnside's lemma over the class families of
// GL(2,p): the number of orbits on irreducible degree-n forms is
//   (a + b + c + d) / |GL(2,p)|
// where each term is (number of classes) * (class size) * fix(representative)
// summed over one kind of family.

#include "formcount/census.hpp"
#include "formcount/numtheory.hpp"

#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace formcount {

struct KRSplit {
  std::int64_t n, e, k, r;
};

/// n/e = k r, with k the largest divisor of n coprime to e.
inline KRSplit kr_split(std::int64_t n, std::int64_t e) {
  if (n < 1 || e < 1 || n % e != 0) throw std::invalid_argument("kr_split: e must divide n");
  std::int64_t k = n;
  for (auto q : prime_factors(e)) {
    while (k % q == 0) k /= q;
  }
  return {n, e, k, n / (e * k)};
}

struct OrbitTerms {
  Rational a, b, c, d;
};

struct OrbitCountReport {
  std::uint64_t p;
  std::int64_t n;
  std::optional<OrbitTerms> terms;  // absent for n <= 2
  BigInt group_order;
  BigInt orbit_count;

  bool special_case() const { return !terms.has_value(); }
};

namespace detail {

inline void require_prime(std::uint64_t p, const char* what) {
  if (!is_prime(static_cast<std::int64_t>(p))) {
    throw std::invalid_argument(std::string(what) + ": " + std::to_string(p) + " is not prime");
  }
}

}  // namespace detail

/// Number of projective irreducible forms of degree n (n >= 2):
/// (1/n) sum_{d|n} mu(d) p^(n/d).
inline BigInt count_S(std::uint64_t p, std::int64_t n) {
  detail::require_prime(p, "count_S");
  return count_monic_irreducible(p, n);
}

/// Fixed irreducible forms of the transvection [[1,1],[0,1]].
inline Rational func_B(std::uint64_t p, std::int64_t n) {
  detail::require_prime(p, "func_B");
  detail::require_positive(n, "func_B");
  const auto pp = static_cast<std::int64_t>(p);
  if (n % pp != 0) return 0;
  BigInt sum = 0;
  for (auto d : divisors(n)) {
    if (d % pp == 0) continue;
    const int mu = mobius(d);
    if (mu != 0) sum += mu * ipow(BigInt(p), static_cast<std::uint64_t>(n / (pp * d)));
  }
  return Rational(BigInt(pp - 1) * sum, BigInt(n));
}

/// Fixed irreducible forms of diag(nu, 1) with nu of order e, e | gcd(n, p-1).
inline Rational func_A(std::uint64_t p, std::int64_t n, std::int64_t e) {
  detail::require_prime(p, "func_A");
  if (e <= 1 || n % e != 0 || static_cast<std::int64_t>(p - 1) % e != 0) {
    throw std::invalid_argument("func_A: need e > 1 dividing gcd(n, p-1)");
  }
  const auto s = kr_split(n, e);
  BigInt sum = 0;
  for (auto d : divisors(s.k)) {
    const int mu = mobius(d);
    if (mu != 0) sum += mu * (ipow(BigInt(p), static_cast<std::uint64_t>(s.k * s.r / d)) - 1);
  }
  return Rational(BigInt(euler_phi(e)) * sum, BigInt(n));
}

/// Fixed irreducible forms of an anisotropic element of projective order e,
/// e | gcd(n, p+1).
inline Rational func_C(std::uint64_t p, std::int64_t n, std::int64_t e) {
  detail::require_prime(p, "func_C");
  if (e <= 1 || n % e != 0 || static_cast<std::int64_t>(p + 1) % e != 0) {
    throw std::invalid_argument("func_C: need e > 1 dividing gcd(n, p+1)");
  }
  const auto s = kr_split(n, e);
  BigInt sum = 0;
  for (auto d : divisors(s.k)) {
    const int mu = mobius(s.k / d);
    if (mu == 0) continue;
    const auto rd = static_cast<std::uint64_t>(s.r * d);
    sum += mu * (ipow(BigInt(p), rd) - 1 + 2 * static_cast<int>(rd % 2));
  }
  return Rational(BigInt(euler_phi(e)) * sum, BigInt(n));
}

/// Fixed-point count predicted for the representative of a class family.
inline Rational predicted_fix(std::uint64_t p, std::int64_t n, const ClassFamily& family) {
  const auto e = static_cast<std::int64_t>(family.e);
  switch (family.kind) {
    case ClassKind::Central:
      return Rational(count_S(p, n));
    case ClassKind::Transvection:
      return func_B(p, n);
    case ClassKind::SplitSemisimple:
      return n % e == 0 ? func_A(p, n, e) : Rational(0);
    case ClassKind::Anisotropic:
      return n % e == 0 ? func_C(p, n, e) : Rational(0);
  }
  return 0;
}

inline OrbitCountReport orbit_count(std::uint64_t p, std::int64_t n) {
  detail::require_prime(p, "orbit_count");
  detail::require_positive(n, "orbit_count");
  OrbitCountReport report{p, n, std::nullopt, gl2_order(p), BigInt(1)};
  if (n <= 2) return report;

  const BigInt q(p);
  const auto pp = static_cast<std::int64_t>(p);
  OrbitTerms t;
  t.a = Rational((q - 1) * count_S(p, n));
  t.b = Rational((q - 1) * (q * q - 1)) * func_B(p, n);
  t.c = 0;
  t.d = 0;
  for (auto e : divisors(std::gcd<std::int64_t>(n, pp - 1))) {
    if (e == 1) continue;
    t.c += Rational(BigInt(euler_phi(e)) * (q - 1) * (q * q + q), 2) * func_A(p, n, e);
  }
  for (auto e : divisors(std::gcd<std::int64_t>(n, pp + 1))) {
    if (e == 1) continue;
    t.d += Rational(BigInt(euler_phi(e)) * (q - 1) * (q * q - q), 2) * func_C(p, n, e);
  }
  const Rational total = (t.a + t.b + t.c + t.d) / Rational(report.group_order);
  report.orbit_count = to_integer(total, "orbit_count: Burnside quotient");
  report.terms = t;
  return report;
}

/// Indecomposable (d,2) groups: one for odd d, and for d = 2n one per orbit
/// of forms g^(n/m) with g irreducible of degree m | n.
inline BigInt indecomposable_group_count(std::uint64_t p, std::int64_t d) {
  detail::require_prime(p, "indecomposable_group_count");
  if (d < 3) throw std::invalid_argument("indecomposable_group_count: d must be >= 3");
  if (d % 2 == 1) return 1;
  BigInt total = 0;
  for (auto m : divisors(d / 2)) total += orbit_count(p, m).orbit_count;
  return total;
}

}  // namespace formcount
