#pragma once

// Brute-force ground truth for the closed forms: orbit enumeration by
// generator closure, the literal Burnside sum over every element of GL(2,p),
// fixed-point counts of single matrices, and direct checks of the anisotropic
// construction (the forms a, b, the irreducible-pencil count, the eigenspace basis).

#include "formcount/census.hpp"
#include "formcount/finitefield.hpp"
#include "formcount/forms.hpp"
#include "formcount/matrix.hpp"
#include "formcount/numtheory.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace formcount {

inline constexpr std::uint64_t kDefaultBurnsideBudget = 50'000'000;  // p^4 * |S|
inline constexpr std::uint64_t kPencilScanBound = 10'000;            // p^m

struct OracleOptions {
  std::uint64_t bound = kDefaultEnumerationBound;
  std::uint64_t burnside_budget = kDefaultBurnsideBudget;
  unsigned workers = 1;
};

struct OrbitPartition {
  std::uint64_t p;
  unsigned n;
  std::vector<std::vector<BinaryForm>> orbits;  // each sorted; orbits sorted by representative

  std::size_t count() const { return orbits.size(); }
  const BinaryForm& representative(std::size_t i) const { return orbits[i].front(); }
};

/// Generators of GL(2,p): transvection, primitive-root diagonal (p > 2), swap.
inline std::vector<Mat2> gl2_generators(std::uint64_t p) {
  const PrimeField f(p);
  std::vector<Mat2> gens{Mat2(f, 1, 1, 0, 1)};
  if (p > 2) gens.push_back(Mat2::diagonal(f, least_primitive_root(p), 1));
  gens.emplace_back(f, 0, 1, 1, 0);
  return gens;
}

namespace detail {

// Position of a normalized form with leading coefficient 1 in the
// lexicographic enumeration.
inline std::uint64_t monic_form_key(const BinaryForm& f) {
  std::uint64_t key = 0;
  for (unsigned i = 1; i <= f.degree(); ++i) key = key * f.p() + f[i];
  return key;
}

}  // namespace detail

/// Orbits of GL(2,p) on irreducible forms of degree n >= 2, by closure under
/// the generators. Single-threaded so the queue order is reproducible.
inline OrbitPartition orbit_partition(std::uint64_t p, unsigned n, std::uint64_t bound = kDefaultEnumerationBound) {
  const auto forms = enumerate_irreducible_forms(p, n, bound);
  std::uint64_t keyspace = 1;
  for (unsigned i = 0; i < n; ++i) keyspace *= p;
  std::vector<std::int64_t> id(keyspace, -1);
  for (std::size_t i = 0; i < forms.size(); ++i) id[detail::monic_form_key(forms[i])] = static_cast<std::int64_t>(i);

  std::vector<Substitution> gens;
  for (const auto& g : gl2_generators(p)) gens.emplace_back(g, n);

  OrbitPartition part{p, n, {}};
  std::vector<bool> seen(forms.size(), false);
  for (std::size_t start = 0; start < forms.size(); ++start) {
    if (seen[start]) continue;
    std::vector<BinaryForm> orbit;
    std::deque<std::size_t> queue{start};
    seen[start] = true;
    while (!queue.empty()) {
      const std::size_t cur = queue.front();
      queue.pop_front();
      orbit.push_back(forms[cur]);
      for (const auto& s : gens) {
        const BinaryForm img = s.apply(forms[cur]);
        if (img[0] != 1) throw InvariantViolation("orbit_partition: image " + img.to_string() + " is not irreducible");
        const auto j = id[detail::monic_form_key(img)];
        if (j < 0) throw InvariantViolation("orbit_partition: image " + img.to_string() + " is not irreducible");
        if (!seen[static_cast<std::size_t>(j)]) {
          seen[static_cast<std::size_t>(j)] = true;
          queue.push_back(static_cast<std::size_t>(j));
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    part.orbits.push_back(std::move(orbit));
  }
  return part;
}

inline OrbitPartition orbit_count_bfs(std::uint64_t p, unsigned n, const OracleOptions& opts = {}) {
  if (n < 3) throw std::invalid_argument("orbit_count_bfs: n must be >= 3");
  return orbit_partition(p, n, opts.bound);
}

/// Number of forms in the list fixed (projectively) by g.
inline std::uint64_t fix_count(const std::vector<BinaryForm>& forms, const Mat2& g, unsigned n) {
  const Substitution s(g, n);
  std::uint64_t count = 0;
  for (const auto& f : forms) count += s.fixes(f) ? 1 : 0;
  return count;
}

inline std::uint64_t fix_brute(std::uint64_t p, unsigned n, const Mat2& g, std::uint64_t bound = kDefaultEnumerationBound) {
  if (n < 3) throw std::invalid_argument("fix_brute: n must be >= 3");
  if (g.field().p() != p) throw std::invalid_argument("fix_brute: matrix over a different field");
  return fix_count(enumerate_irreducible_forms(p, n, bound), g, n);
}

/// (1/|G|) sum over every g in GL(2,p) of fix(g), with group elements
/// sharded across workers.
inline BigInt orbit_count_burnside_brute(std::uint64_t p, unsigned n, const OracleOptions& opts = {}) {
  if (n < 3) throw std::invalid_argument("orbit_count_burnside_brute: n must be >= 3");
  const auto forms = enumerate_irreducible_forms(p, n, opts.bound);
  const BigInt work = ipow(BigInt(p), 4) * forms.size();
  if (work > opts.burnside_budget) {
    throw BoundExceeded("Burnside brute force for p=" + std::to_string(p) + ", n=" + std::to_string(n) +
                        " needs " + work.str() + " checks, budget " + std::to_string(opts.burnside_budget));
  }
  const PrimeField f(p);
  const unsigned workers = std::max(1U, opts.workers);
  std::vector<std::uint64_t> partial(workers, 0);
  auto shard = [&](unsigned w) {
    std::uint64_t index = 0, sum = 0;
    for (std::uint64_t a = 0; a < p; ++a) {
      for (std::uint64_t b = 0; b < p; ++b) {
        for (std::uint64_t c = 0; c < p; ++c) {
          for (std::uint64_t d = 0; d < p; ++d) {
            if (f.mul(a, d) == f.mul(b, c)) continue;
            if (index++ % workers != w) continue;
            const Mat2 g(f, static_cast<std::int64_t>(a), static_cast<std::int64_t>(b), static_cast<std::int64_t>(c),
                         static_cast<std::int64_t>(d));
            sum += fix_count(forms, g, n);
          }
        }
      }
    }
    partial[w] = sum;
  };
  if (workers == 1) {
    shard(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(shard, w);
  }
  BigInt total = 0;
  for (auto s : partial) total += s;
  const BigInt order = gl2_order(p);
  if (total % order != 0) {
    throw InvariantViolation("orbit_count_burnside_brute: fixed-point sum " + total.str() + " not divisible by " +
                             order.str());
  }
  return total / order;
}

struct ABForms {
  BinaryForm a;
  BinaryForm b;
  std::uint64_t lambda_e;  // lambda^e, an element of GF(p)
};

/// With lambda a root of x^2 - s x - r in GF(p^2):
///   a = ((x + lambda y)^e + (x + lambda^p y)^e) / 2
///   b = ((x + lambda y)^e - (x + lambda^p y)^e) / (e (lambda - lambda^p))
inline ABForms build_ab(std::uint64_t p, std::uint64_t e, std::uint64_t s, std::uint64_t r) {
  const PrimeField fp(p);
  if (p == 2) throw std::invalid_argument("build_ab: p must be odd");
  if (e <= 1 || (p + 1) % e != 0) throw std::invalid_argument("build_ab: need e > 1 dividing p+1");
  const Mat2 g(fp, 0, static_cast<std::int64_t>(r), 1, static_cast<std::int64_t>(s));
  const Polynomial<PrimeField> charpoly(fp, {fp.neg(r % p), fp.neg(s % p), 1});
  if (!is_irreducible(charpoly)) throw std::invalid_argument("build_ab: x^2 - s x - r is reducible");
  if (projective_order(g) != e) throw std::invalid_argument("build_ab: companion matrix has the wrong projective order");

  const ExtensionField k(fp, charpoly);
  const auto lambda = k.generator_u();
  const auto conj = k.frobenius(lambda);
  const auto half = k.inv(k.from_int(2));
  const auto scale = k.inv(k.mul(k.from_int(static_cast<std::int64_t>(e)), k.sub(lambda, conj)));

  std::vector<std::uint64_t> binom{1};
  for (std::uint64_t i = 1; i <= e; ++i) {
    std::vector<std::uint64_t> next(i + 1, 1);
    for (std::uint64_t j = 1; j < i; ++j) next[j] = fp.add(binom[j - 1], binom[j]);
    binom = std::move(next);
  }
  auto to_base = [&](std::uint64_t v, const char* which) {
    if (!k.in_base_field(v)) {
      throw InvariantViolation(std::string("build_ab: coefficient of ") + which + " outside GF(" + std::to_string(p) +
                               ")");
    }
    return v;
  };
  std::vector<std::uint64_t> a(e + 1), b(e + 1);
  for (std::uint64_t j = 0; j <= e; ++j) {
    const auto lj = k.pow(lambda, j), cj = k.pow(conj, j);
    const auto c = k.from_int(static_cast<std::int64_t>(binom[j]));
    a[j] = to_base(k.mul(c, k.mul(k.add(lj, cj), half)), "a");
    b[j] = to_base(k.mul(c, k.mul(k.sub(lj, cj), scale)), "b");
  }
  const auto lambda_e = to_base(k.pow(lambda, e), "lambda^e");
  if (a[0] != 1 || b[0] != 0 || b[e] != 0 || b[1] != 1 || a[e] != lambda_e) {
    throw InvariantViolation("build_ab: leading coefficients of a, b violate the construction");
  }
  return {BinaryForm(fp, std::move(a)), BinaryForm(fp, std::move(b)), lambda_e};
}

/// Number of beta in GF(p^m) with a(x,1) - beta b(x,1) irreducible over GF(p^m).
inline std::uint64_t pencil_irreducible_count(std::uint64_t p, std::uint64_t e, std::uint64_t s, std::uint64_t r, unsigned m) {
  if (m == 0) throw std::invalid_argument("pencil_irreducible_count: m must be >= 1");
  if (ipow(BigInt(p), m) > kPencilScanBound) {
    throw BoundExceeded("pencil_irreducible_count: p^m exceeds " + std::to_string(kPencilScanBound));
  }
  const auto ab = build_ab(p, e, s, r);
  const auto field = ExtensionField::standard(p, m);
  // ascending coefficients of a(x,1), b(x,1)
  std::vector<std::uint64_t> a(e + 1), b(e + 1);
  for (std::uint64_t j = 0; j <= e; ++j) {
    a[e - j] = field.from_int(static_cast<std::int64_t>(ab.a[j]));
    b[e - j] = field.from_int(static_cast<std::int64_t>(ab.b[j]));
  }
  std::uint64_t count = 0;
  std::vector<std::uint64_t> c(e + 1);
  for (std::uint64_t beta = 0; beta < field.order(); ++beta) {
    for (std::uint64_t j = 0; j <= e; ++j) c[j] = field.sub(a[j], field.mul(beta, b[j]));
    if (is_irreducible(Polynomial<ExtensionField>(field, c))) ++count;
  }
  return count;
}

/// True when every irreducible form fixed by [[0,r],[1,s]] lies in the
/// GF(p)-span of a^(n/e - i) b^i, i = 0..n/e.
inline bool eigenbasis_check(std::uint64_t p, unsigned n, std::uint64_t e, std::uint64_t s, std::uint64_t r,
                             std::uint64_t bound = kDefaultEnumerationBound) {
  if (n % e != 0) throw std::invalid_argument("eigenbasis_check: e must divide n");
  const auto ab = build_ab(p, e, s, r);
  const PrimeField fp(p);
  const unsigned kr = n / static_cast<unsigned>(e);
  std::vector<BinaryForm> basis;
  for (unsigned i = 0; i <= kr; ++i) {
    std::vector<std::uint64_t> c{1};
    for (unsigned j = 0; j < kr - i; ++j) c = detail::mul_raw(fp, c, ab.a.coefficients());
    for (unsigned j = 0; j < i; ++j) c = detail::mul_raw(fp, c, ab.b.coefficients());
    basis.emplace_back(fp, std::move(c));
  }
  Matrix<PrimeField> span(fp, basis.size() + 1, n + 1);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (unsigned j = 0; j <= n; ++j) span(i, j) = basis[i][j];
  }
  Matrix<PrimeField> without = span;
  for (unsigned j = 0; j <= n; ++j) without(basis.size(), j) = 0;
  const std::size_t base_rank = without.rank();

  const Substitution g(Mat2(fp, 0, static_cast<std::int64_t>(r), 1, static_cast<std::int64_t>(s)), n);
  for (const auto& f : enumerate_irreducible_forms(p, n, bound)) {
    if (!g.fixes(f)) continue;
    for (unsigned j = 0; j <= n; ++j) span(basis.size(), j) = f[j];
    if (span.rank() != base_rank) return false;
  }
  return true;
}

}  // namespace formcount
