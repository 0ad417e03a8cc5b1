#pragma once

// Conjugacy classes of GL(2,p), grouped into families that share a fixed-point
// count on binary forms.

#include "formcount/matrix.hpp"
#include "formcount/numtheory.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace formcount {

enum class ClassKind { Central, Transvection, SplitSemisimple, Anisotropic };

inline std::string to_string(ClassKind k) {
  switch (k) {
    case ClassKind::Central:
      return "central";
    case ClassKind::Transvection:
      return "transvection";
    case ClassKind::SplitSemisimple:
      return "split";
    case ClassKind::Anisotropic:
      return "anisotropic";
  }
  return "?";
}

struct ClassFamily {
  ClassKind kind;
  std::uint64_t e;       // projective order (p for transvections, 1 for central)
  Rational class_count;  // may be fractional in isolation when p = 2
  BigInt class_size;
  Mat2 representative;
};

inline BigInt gl2_order(std::uint64_t p) {
  const BigInt q(p);
  return (q * q - 1) * (q * q - q);
}

/// Least s >= 1 with g^s scalar.
inline std::uint64_t projective_order(const Mat2& g) {
  const std::uint64_t p = g.field().p();
  Mat2 h = g;
  for (std::uint64_t s = 1; s <= p * p; ++s) {
    if (h.is_scalar()) return s;
    h = h * g;
  }
  throw InvariantViolation("projective_order: no scalar power found for " + g.to_string());
}

/// [[0,r],[1,s]] with x^2 - s x - r irreducible and projective order e, the
/// first such pair in lexicographic order of (s, r).
inline Mat2 representative_anisotropic(std::uint64_t p, std::uint64_t e) {
  const PrimeField f(p);
  if (e <= 1 || (p + 1) % e != 0) throw std::invalid_argument("representative_anisotropic: need e > 1 dividing p+1");
  for (std::uint64_t s = 0; s < p; ++s) {
    for (std::uint64_t r = 1; r < p; ++r) {
      // x^2 - s x - r has no root in GF(p)
      bool has_root = false;
      for (std::uint64_t t = 0; t < p && !has_root; ++t) {
        has_root = f.sub(f.sub(f.mul(t, t), f.mul(s, t)), r) == 0;
      }
      if (has_root) continue;
      Mat2 g(f, 0, static_cast<std::int64_t>(r), 1, static_cast<std::int64_t>(s));
      if (projective_order(g) == e) return g;
    }
  }
  throw InvariantViolation("representative_anisotropic: no matrix of projective order " + std::to_string(e));
}

inline std::vector<ClassFamily> class_families(std::uint64_t p) {
  const PrimeField f(p);
  const BigInt q(p);
  std::vector<ClassFamily> out;
  out.push_back({ClassKind::Central, 1, Rational(q - 1), BigInt(1), Mat2::identity(f)});
  out.push_back({ClassKind::Transvection, p, Rational(q - 1), q * q - 1, Mat2(f, 1, 1, 0, 1)});

  const std::uint64_t w = least_primitive_root(p);
  for (auto e : divisors(static_cast<std::int64_t>(p - 1))) {
    if (e == 1) continue;
    const auto nu = f.pow(w, (p - 1) / static_cast<std::uint64_t>(e));
    out.push_back({ClassKind::SplitSemisimple, static_cast<std::uint64_t>(e), Rational(euler_phi(e) * (q - 1), 2),
                   q * q + q, Mat2::diagonal(f, nu, 1)});
  }
  for (auto e : divisors(static_cast<std::int64_t>(p + 1))) {
    if (e == 1) continue;
    const auto ue = static_cast<std::uint64_t>(e);
    out.push_back({ClassKind::Anisotropic, ue, Rational(euler_phi(e) * (q - 1), 2), q * q - q,
                   representative_anisotropic(p, ue)});
  }
  return out;
}

}  // namespace formcount
