#pragma once

// Presentations of the indecomposable (d,2) groups: class two, exponent p,
// derived group of order p^2, d generators. Relations making the group class
// two of exponent p are implicit and only noted in the GAP rendering.

#include "formcount/counting.hpp"
#include "formcount/forms.hpp"
#include "formcount/matrix.hpp"
#include "formcount/oracle.hpp"

#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace formcount {

/// Companion matrix: ones on the subdiagonal, last column -c_0, ..., -c_{n-1}.
inline Matrix<PrimeField> companion_matrix(const Polynomial<PrimeField>& f) {
  if (f.degree() < 1 || !f.is_monic()) throw std::invalid_argument("companion_matrix: polynomial must be monic of degree >= 1");
  const auto& fp = f.field();
  const auto n = static_cast<std::size_t>(f.degree());
  Matrix<PrimeField> m(fp, n, n);
  for (std::size_t i = 0; i + 1 < n; ++i) m(i + 1, i) = 1;
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = fp.neg(f[i]);
  if (!(m.charpoly() == f)) throw InvariantViolation("companion_matrix: characteristic polynomial mismatch");
  return m;
}

struct Commutator {
  std::size_t left, right;  // generator indices
};

/// Product of generator powers; empty means the identity.
struct PowerWord {
  std::vector<std::pair<std::size_t, std::uint64_t>> factors;
};

struct Relation {
  Commutator lhs;
  std::variant<Commutator, PowerWord> rhs;
};

struct GroupPresentation {
  std::uint64_t p;
  std::int64_t d;
  std::vector<std::string> generators;
  std::vector<Relation> relations;
  // Present for even d only.
  std::optional<BinaryForm> form;       // f = base_form^power
  std::optional<BinaryForm> base_form;  // irreducible g
  unsigned power = 1;
  std::optional<Matrix<PrimeField>> scharlau_b;  // A is the identity
};

inline GroupPresentation odd_presentation(std::uint64_t p, std::int64_t d) {
  detail::require_prime(p, "odd_presentation");
  if (d < 3 || d % 2 == 0) throw std::invalid_argument("odd_presentation: d must be odd and >= 3");
  GroupPresentation g{p, d, {}, {}, std::nullopt, std::nullopt, 1, std::nullopt};
  const auto n = static_cast<std::size_t>(d);
  for (std::size_t i = 1; i <= n; ++i) g.generators.push_back("a" + std::to_string(i));
  // [a1,a2] = [a3,a4] = ... = [a_{d-2},a_{d-1}] and [a2,a3] = [a4,a5] = ... = [a_{d-1},a_d]
  std::vector<bool> chained(n * n, false);
  for (std::size_t start : {0U, 1U}) {
    for (std::size_t i = start; i + 1 < n; i += 2) {
      chained[i * n + i + 1] = true;
      if (i + 3 < n) g.relations.push_back({{i, i + 1}, Commutator{i + 2, i + 3}});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!chained[i * n + j]) g.relations.push_back({{i, j}, PowerWord{}});
    }
  }
  return g;
}

/// V_f for f = base^power of degree n: generators x1..xn, y1..yn, z1, z2 with
/// [x_i, y_j] = z1^{A_ij} z2^{B_ij}, A = I, B the companion matrix of f(x,1).
inline GroupPresentation scharlau_presentation(const BinaryForm& base, unsigned power) {
  const BinaryForm f = power_form(base, power);
  const auto& fp = f.field();
  const std::size_t n = f.degree();
  GroupPresentation g{fp.p(), static_cast<std::int64_t>(2 * n), {}, {}, f, base, power, std::nullopt};
  for (std::size_t i = 1; i <= n; ++i) g.generators.push_back("x" + std::to_string(i));
  for (std::size_t i = 1; i <= n; ++i) g.generators.push_back("y" + std::to_string(i));
  g.generators.emplace_back("z1");
  g.generators.emplace_back("z2");
  const std::size_t z1 = 2 * n, z2 = 2 * n + 1;

  const auto b = companion_matrix(f.dehomogenize());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      PowerWord w;
      if (i == j) w.factors.emplace_back(z1, 1);
      if (b(i, j) != 0) w.factors.emplace_back(z2, b(i, j));
      g.relations.push_back({{i, n + j}, w});
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      g.relations.push_back({{i, j}, PowerWord{}});
      g.relations.push_back({{n + i, n + j}, PowerWord{}});
    }
  }
  g.scharlau_b = b;
  return g;
}

/// One presentation per orbit of forms g^(n/m), g irreducible of degree m | n.
inline std::vector<GroupPresentation> even_presentations(std::uint64_t p, std::int64_t d,
                                                         std::uint64_t bound = kDefaultEnumerationBound) {
  detail::require_prime(p, "even_presentations");
  if (d < 4 || d % 2 != 0) throw std::invalid_argument("even_presentations: d must be even and >= 4");
  const PrimeField fp(p);
  const std::int64_t n = d / 2;
  std::vector<GroupPresentation> out;
  for (auto m : divisors(n)) {
    const auto k = static_cast<unsigned>(n / m);
    if (m == 1) {
      out.push_back(scharlau_presentation(BinaryForm(fp, {1, 0}), k));
      continue;
    }
    const auto part = orbit_partition(p, static_cast<unsigned>(m), bound);
    for (std::size_t i = 0; i < part.count(); ++i) out.push_back(scharlau_presentation(part.representative(i), k));
  }
  if (BigInt(out.size()) != indecomposable_group_count(p, d)) {
    throw InvariantViolation("even_presentations: " + std::to_string(out.size()) +
                             " presentations disagree with the orbit-count formula");
  }
  return out;
}

inline std::string commutator_text(const GroupPresentation& g, const Commutator& c) {
  return "[" + g.generators[c.left] + "," + g.generators[c.right] + "]";
}

inline std::string word_text(const GroupPresentation& g, const PowerWord& w) {
  if (w.factors.empty()) return "1";
  std::string out;
  for (const auto& [gen, k] : w.factors) {
    if (!out.empty()) out += "*";
    out += g.generators[gen];
    if (k != 1) out += "^" + std::to_string(k);
  }
  return out;
}

inline std::string rhs_text(const GroupPresentation& g, const Relation& r) {
  if (const auto* c = std::get_if<Commutator>(&r.rhs)) return commutator_text(g, *c);
  return word_text(g, std::get<PowerWord>(r.rhs));
}

inline std::string render_text(const GroupPresentation& g) {
  std::ostringstream os;
  os << "(" << g.d << ",2) group, p = " << g.p;
  if (g.form) {
    os << ", f = " << g.form->to_string();
    if (g.power > 1) os << " = (" << g.base_form->to_string() << ")^" << g.power;
  }
  os << "\ngenerators:";
  for (const auto& name : g.generators) os << " " << name;
  os << "\nrelations:\n";
  for (const auto& r : g.relations) os << "  " << commutator_text(g, r.lhs) << " = " << rhs_text(g, r) << "\n";
  return os.str();
}

/// A GAP finitely presented group. Power relations and all commutator
/// relations among generators are explicit.
inline std::string render_gap(const GroupPresentation& g) {
  std::ostringstream os;
  os << "# (" << g.d << ",2) group over GF(" << g.p << ")";
  if (g.form) os << ", f = " << g.form->to_string();
  os << "\n# Class two and exponent " << g.p
     << " are ambient: take the largest class-2 exponent-p quotient,\n"
     << "# e.g. PQuotient(G, " << g.p << ", 2).\n";
  os << "F := FreeGroup(";
  for (std::size_t i = 0; i < g.generators.size(); ++i) os << (i ? ", " : "") << '"' << g.generators[i] << '"';
  os << ");;\n";
  auto gen = [&](std::size_t i) { return "F." + std::to_string(i + 1); };
  auto comm = [&](const Commutator& c) { return "Comm(" + gen(c.left) + ", " + gen(c.right) + ")"; };
  std::vector<std::string> rels;
  for (std::size_t i = 0; i < g.generators.size(); ++i) rels.push_back(gen(i) + "^" + std::to_string(g.p));
  for (const auto& r : g.relations) {
    if (const auto* c = std::get_if<Commutator>(&r.rhs)) {
      rels.push_back(comm(r.lhs) + "*" + comm(*c) + "^-1");
      continue;
    }
    const auto& w = std::get<PowerWord>(r.rhs);
    if (w.factors.empty()) {
      rels.push_back(comm(r.lhs));
      continue;
    }
    std::string word;
    for (const auto& [i, k] : w.factors) word += (word.empty() ? "" : "*") + gen(i) + "^" + std::to_string(k);
    rels.push_back(comm(r.lhs) + "*(" + word + ")^-1");
  }
  if (g.form) {
    // z1, z2 central
    const std::size_t z1 = g.generators.size() - 2;
    for (std::size_t i = 0; i < z1; ++i) {
      rels.push_back("Comm(" + gen(i) + ", " + gen(z1) + ")");
      rels.push_back("Comm(" + gen(i) + ", " + gen(z1 + 1) + ")");
    }
    rels.push_back("Comm(" + gen(z1) + ", " + gen(z1 + 1) + ")");
  }
  os << "G := F / [\n";
  for (std::size_t i = 0; i < rels.size(); ++i) os << "  " << rels[i] << (i + 1 < rels.size() ? ",\n" : "\n");
  os << "];;\n";
  return os.str();
}

}  // namespace formcount
