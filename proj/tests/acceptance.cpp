// Acceptance suite: one PASS/FAIL line per criterion, each under its time limit.
// Exit status is the number of failing criteria (0 when all pass).

#include "formcount/census.hpp"
#include "formcount/counting.hpp"
#include "formcount/oracle.hpp"
#include "formcount/porc.hpp"
#include "formcount/presentations.hpp"

#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

using namespace formcount;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> check;
};

std::string at(std::uint64_t p, std::int64_t n) { return "(p=" + std::to_string(p) + ", n=" + std::to_string(n) + ")"; }

const std::vector<std::pair<std::uint64_t, unsigned>>& oracle_range() {
  static const std::vector<std::pair<std::uint64_t, unsigned>> range = [] {
    std::vector<std::pair<std::uint64_t, unsigned>> r;
    for (std::uint64_t p : {2, 3, 5, 7}) {
      for (unsigned n : {3, 4, 5}) r.emplace_back(p, n);
    }
    r.emplace_back(2, 6);
    r.emplace_back(3, 6);
    return r;
  }();
  return range;
}

Outcome c1_cubic() {
  Outcome o;
  for (auto p : primes_between(2, 97)) {
    const auto got = orbit_count(static_cast<std::uint64_t>(p), 3).orbit_count;
    if (got != 1) o.fail("orbit_count" + at(p, 3) + " = " + got.str());
  }
  return o;
}

Outcome c2_quartic() {
  Outcome o;
  if (orbit_count(2, 4).orbit_count != 1) o.fail("orbit_count(2,4) != 1");
  for (auto p : primes_between(3, 97)) {
    const auto got = orbit_count(static_cast<std::uint64_t>(p), 4).orbit_count;
    if (got != (p + 1) / 2) o.fail("orbit_count" + at(p, 4) + " = " + got.str());
  }
  return o;
}

Outcome c3_quintic() {
  Outcome o;
  if (orbit_count(2, 5).orbit_count != 1) o.fail("orbit_count(2,5) != 1");
  if (orbit_count(5, 5).orbit_count != 6) o.fail("orbit_count(5,5) != 6");
  for (auto p : primes_between(3, 97)) {
    if (p == 5) continue;
    const std::int64_t expected = (p * p - 1 + 2 * std::gcd<std::int64_t>(p * p - 1, 5)) / 5;
    const auto got = orbit_count(static_cast<std::uint64_t>(p), 5).orbit_count;
    if (got != expected) o.fail("orbit_count" + at(p, 5) + " = " + got.str() + ", want " + std::to_string(expected));
  }
  return o;
}

Outcome c4_oracles() {
  Outcome o;
  for (auto [p, n] : oracle_range()) {
    const BigInt formula = orbit_count(p, n).orbit_count;
    const auto bfs = orbit_count_bfs(p, n).count();
    const BigInt burnside = orbit_count_burnside_brute(p, n);
    if (formula != bfs || formula != burnside) {
      o.fail(at(p, n) + ": formula " + formula.str() + ", bfs " + std::to_string(bfs) + ", burnside " +
             burnside.str());
    }
  }
  if (orbit_count(3, 6).orbit_count != 7) o.fail("orbit_count(3,6) != 7");
  return o;
}

Outcome c5_fix() {
  Outcome o;
  for (auto [p, n] : oracle_range()) {
    const auto forms = enumerate_irreducible_forms(p, n);
    for (const auto& fam : class_families(p)) {
      const Rational predicted = predicted_fix(p, n, fam);
      const auto brute = fix_count(forms, fam.representative, n);
      if (predicted != Rational(brute)) {
        o.fail(at(p, n) + " " + to_string(fam.kind) + " e=" + std::to_string(fam.e) + ": predicted " +
               predicted.str() + ", brute " + std::to_string(brute));
      }
    }
  }
  return o;
}

Outcome c6_pencil() {
  Outcome o;
  for (std::uint64_t p : {3, 5, 7}) {
    for (auto e : divisors(static_cast<std::int64_t>(p + 1))) {
      if (e == 1) continue;
      const auto rep = representative_anisotropic(p, static_cast<std::uint64_t>(e));
      for (unsigned m = 1; ipow(BigInt(p), m) <= kPencilScanBound; ++m) {
        const BigInt pm = ipow(BigInt(p), m);
        const Rational expected = Rational(BigInt(euler_phi(e)), BigInt(e)) * Rational(pm - (m % 2 ? -1 : 1));
        const auto got = pencil_irreducible_count(p, static_cast<std::uint64_t>(e), rep.d(), rep.b(), m);
        if (Rational(got) != expected) {
          o.fail("p=" + std::to_string(p) + " e=" + std::to_string(e) + " m=" + std::to_string(m) + ": got " +
                 std::to_string(got) + ", want " + expected.str());
        }
      }
    }
  }
  return o;
}

Outcome c7_census() {
  Outcome o;
  for (auto pi : primes_between(2, 50)) {
    const auto p = static_cast<std::uint64_t>(pi);
    const BigInt q(p);
    Rational elements = 0, classes = 0;
    for (const auto& fam : class_families(p)) {
      elements += fam.class_count * Rational(fam.class_size);
      classes += fam.class_count;
    }
    if (elements != Rational((q * q - 1) * (q * q - q))) o.fail("p=" + std::to_string(p) + ": element total " + elements.str());
    if (classes != Rational(q * q - 1)) o.fail("p=" + std::to_string(p) + ": class total " + classes.str());
  }
  return o;
}

Outcome c8_porc() {
  Outcome o;
  for (std::int64_t n = 3; n <= 10; ++n) {
    const auto table = porc_table(n);  // throws on an inexact division
    for (const auto& [r, poly] : table.classes) {
      int seen = 0;
      for (std::int64_t p = 2; seen < 5; ++p) {
        if (p % n != r || !is_prime(p)) continue;
        ++seen;
        const auto want = orbit_count(static_cast<std::uint64_t>(p), n).orbit_count;
        if (poly.evaluate(Rational(p)) != Rational(want)) {
          o.fail("n=" + std::to_string(n) + " r=" + std::to_string(r) + " p=" + std::to_string(p) + ": " +
                 poly.to_string() + " gives " + poly.evaluate(Rational(p)).str() + ", want " + want.str());
        }
      }
    }
  }
  const auto p = RationalPolynomial::p();
  const auto one = RationalPolynomial::constant(1);
  const auto half_p1 = Rational(1, 2) * (p + one);
  const auto t4 = porc_table(4);
  if (t4.classes.size() != 2 || t4.classes.at(1) != half_p1 || t4.classes.at(3) != half_p1) o.fail("n=4 table");
  const auto t5 = porc_table(5);
  const auto plus9 = Rational(1, 5) * (p * p + RationalPolynomial::constant(9));
  const auto plus1 = Rational(1, 5) * (p * p + one);
  if (t5.classes.size() != 4 || t5.classes.at(1) != plus9 || t5.classes.at(2) != plus1 || t5.classes.at(3) != plus1 ||
      t5.classes.at(4) != plus9) {
    o.fail("n=5 table");
  }
  return o;
}

Outcome c9_groups() {
  Outcome o;
  for (std::uint64_t p : {3, 5, 7}) {
    const auto groups = even_presentations(p, 8);
    if (groups.size() != (p + 5) / 2) {
      o.fail("p=" + std::to_string(p) + ": " + std::to_string(groups.size()) + " presentations");
    }
    for (const auto& g : groups) {
      if (!(g.scharlau_b->charpoly() == g.form->dehomogenize())) {
        o.fail("p=" + std::to_string(p) + ": B charpoly differs from " + g.form->to_string());
      }
    }
  }
  return o;
}

Outcome c10_integrality() {
  Outcome o;
  for (auto pi : primes_between(2, 200)) {
    const auto p = static_cast<std::uint64_t>(pi);
    for (std::int64_t n = 1; n <= 20; ++n) {
      const auto report = orbit_count(p, n);  // asserts integrality itself
      if (!report.terms) continue;
      const auto& t = *report.terms;
      const Rational sum = t.a + t.b + t.c + t.d;
      if (!is_integer(sum) || to_integer(sum, "sum") % report.group_order != 0) {
        o.fail(at(p, n) + ": a+b+c+d = " + sum.str());
      }
    }
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "n=3 has one orbit for all p <= 97", 1, c1_cubic},
      {2, "n=4 orbit counts 1 and (p+1)/2, p <= 97", 1, c2_quartic},
      {3, "n=5 orbit counts, p <= 97", 1, c3_quintic},
      {4, "formula = BFS = Burnside brute force", 180, c4_oracles},
      {5, "per-class fixed points match brute force", 180, c5_fix},
      {6, "anisotropic pencil irreducibility count", 60, c6_pencil},
      {7, "GL(2,p) class census closure, p <= 50", 1, c7_census},
      {8, "residue-class polynomials, n = 3..10", 10, c8_porc},
      {9, "(8,2) group count (p+5)/2 and companion charpolys", 30, c9_groups},
      {10, "Burnside integrality, p <= 200, n <= 20", 30, c10_integrality},
  };

  int failures = 0;
  double shared_oracle_time = 0;  // criteria 4 and 5 share one budget
  for (const auto& c : criteria) {
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    double charged = secs;
    if (c.id == 4 || c.id == 5) {
      shared_oracle_time += secs;
      charged = shared_oracle_time;
    }
    if (o.ok && charged >= c.limit_seconds) o.fail("time limit exceeded");
    if (!o.ok) ++failures;
    std::printf("%s criterion %2d: %-52s %8.3fs (limit %gs)%s%s\n", o.ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs,
                c.limit_seconds, o.ok ? "" : "  ", o.detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
