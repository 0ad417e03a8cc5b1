#pragma once

// Elementary arithmetic functions: factorization, divisors, Möbius, Euler phi,
// primality and primitive roots. All integers handled here are small (degrees,
// orders, primes up to ~10^9), so trial division is used throughout.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace formcount {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an internal consistency check fails (integrality of a
/// Burnside quotient, a coefficient escaping the base field, ...).
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Raised when a brute-force computation would exceed its configured bound.
class BoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct PrimePower {
  std::int64_t prime;
  int exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

using Factorization = std::vector<PrimePower>;

namespace detail {

inline void require_positive(std::int64_t n, const char* what) {
  if (n <= 0) {
    throw std::invalid_argument(std::string(what) + ": argument must be >= 1, got " + std::to_string(n));
  }
}

}  // namespace detail

/// Prime factorization in ascending prime order; factorize(1) is empty.
inline Factorization factorize(std::int64_t n) {
  detail::require_positive(n, "factorize");
  Factorization result;
  for (std::int64_t q = 2; q * q <= n; q += (q == 2 ? 1 : 2)) {
    if (n % q != 0) continue;
    int k = 0;
    while (n % q == 0) {
      n /= q;
      ++k;
    }
    result.push_back({q, k});
  }
  if (n > 1) result.push_back({n, 1});
  return result;
}

inline std::vector<std::int64_t> prime_factors(std::int64_t n) {
  std::vector<std::int64_t> out;
  for (const auto& pp : factorize(n)) out.push_back(pp.prime);
  return out;
}

/// All positive divisors of n, ascending.
inline std::vector<std::int64_t> divisors(std::int64_t n) {
  detail::require_positive(n, "divisors");
  std::vector<std::int64_t> ds{1};
  for (const auto& [q, k] : factorize(n)) {
    const std::size_t base = ds.size();
    std::int64_t qp = 1;
    for (int i = 1; i <= k; ++i) {
      qp *= q;
      for (std::size_t j = 0; j < base; ++j) ds.push_back(ds[j] * qp);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

inline int mobius(std::int64_t n) {
  detail::require_positive(n, "mobius");
  int sign = 1;
  for (const auto& pp : factorize(n)) {
    if (pp.exponent > 1) return 0;
    sign = -sign;
  }
  return sign;
}

inline std::int64_t euler_phi(std::int64_t n) {
  detail::require_positive(n, "euler_phi");
  std::int64_t phi = n;
  for (const auto& pp : factorize(n)) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

inline bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t q = 3; q * q <= n; q += 2) {
    if (n % q == 0) return false;
  }
  return true;
}

/// Primes in [lo, hi], ascending.
inline std::vector<std::int64_t> primes_between(std::int64_t lo, std::int64_t hi) {
  std::vector<std::int64_t> out;
  for (std::int64_t q = std::max<std::int64_t>(lo, 2); q <= hi; ++q) {
    if (is_prime(q)) out.push_back(q);
  }
  return out;
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1U;
  }
  return result;
}

/// Multiplicative order of a modulo m; a must be a unit.
inline std::uint64_t multiplicative_order(std::uint64_t a, std::uint64_t m) {
  if (std::gcd(a % m, m) != 1) throw std::invalid_argument("multiplicative_order: not a unit");
  const auto phi = static_cast<std::uint64_t>(euler_phi(static_cast<std::int64_t>(m)));
  std::uint64_t order = phi;
  for (const auto& [q, k] : factorize(static_cast<std::int64_t>(phi))) {
    for (int i = 0; i < k; ++i) {
      if (powmod(a, order / static_cast<std::uint64_t>(q), m) != 1) break;
      order /= static_cast<std::uint64_t>(q);
    }
  }
  return order;
}

/// Least primitive root modulo the prime p.
inline std::uint64_t least_primitive_root(std::uint64_t p) {
  if (!is_prime(static_cast<std::int64_t>(p))) throw std::invalid_argument("least_primitive_root: p must be prime");
  if (p == 2) return 1;
  const auto qs = prime_factors(static_cast<std::int64_t>(p - 1));
  for (std::uint64_t w = 2; w < p; ++w) {
    bool generator = true;
    for (auto q : qs) {
      if (powmod(w, (p - 1) / static_cast<std::uint64_t>(q), p) == 1) {
        generator = false;
        break;
      }
    }
    if (generator) return w;
  }
  throw InvariantViolation("least_primitive_root: none found");
}

inline BigInt ipow(const BigInt& base, std::uint64_t exp) {
  return boost::multiprecision::pow(base, static_cast<unsigned>(exp));
}

inline bool is_integer(const Rational& q) { return boost::multiprecision::denominator(q) == 1; }

/// Checked conversion of an exact rational known to be integral.
inline BigInt to_integer(const Rational& q, const char* context) {
  if (!is_integer(q)) {
    throw InvariantViolation(std::string(context) + ": expected an integer, got " + q.str());
  }
  return boost::multiprecision::numerator(q);
}

}  // namespace formcount
