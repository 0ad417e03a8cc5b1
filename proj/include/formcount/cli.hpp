#pragma once

// Command-line front end. Exposed as a function so tests can drive it with
// in-memory streams; tools/formcount.cpp is a thin main() around run().
//
// Exit status: 0 success, 2 usage error or refused bound, 3 internal
// invariant violation (integrality, formula/oracle discrepancy, ...).

#include "formcount/census.hpp"
#include "formcount/counting.hpp"
#include "formcount/oracle.hpp"
#include "formcount/porc.hpp"
#include "formcount/presentations.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <cstdlib>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace formcount::cli {

inline constexpr int kUsageError = 2;
inline constexpr int kInternalError = 3;

using Json = nlohmann::ordered_json;

/// --bound, else FORMCOUNT_BOUND, else the library default.
inline std::uint64_t resolve_bound(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("FORMCOUNT_BOUND"); env != nullptr && *env != '\0') {
    std::size_t used = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(env, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != std::string(env).size()) throw std::invalid_argument("FORMCOUNT_BOUND is not a number: " + std::string(env));
    return v;
  }
  return kDefaultEnumerationBound;
}

namespace detail {

inline std::string str(const Rational& q) { return q.str(); }
inline std::string str(const BigInt& z) { return z.str(); }

inline Json matrix_json(const Mat2& g) { return Json::array({Json::array({g.a(), g.b()}), Json::array({g.c(), g.d()})}); }

inline Json report_json(const OrbitCountReport& r, bool with_n) {
  Json j;
  j["p"] = r.p;
  if (with_n) j["n"] = r.n;
  if (r.terms) {
    j["a"] = str(r.terms->a);
    j["b"] = str(r.terms->b);
    j["c"] = str(r.terms->c);
    j["d"] = str(r.terms->d);
  } else {
    j["special_case"] = true;
  }
  j["group_order"] = str(r.group_order);
  j["orbits"] = str(r.orbit_count);
  return j;
}

inline void report_csv_row(std::ostream& out, const OrbitCountReport& r) {
  out << r.p << "," << r.n << ",";
  if (r.terms) {
    out << str(r.terms->a) << "," << str(r.terms->b) << "," << str(r.terms->c) << "," << str(r.terms->d);
  } else {
    out << ",,,";
  }
  out << "," << str(r.group_order) << "," << str(r.orbit_count) << "\n";
}

inline std::string coefficient_row(const BinaryForm& f) {
  std::string s;
  for (std::size_t i = 0; i <= f.degree(); ++i) s += (i ? " " : "") + std::to_string(f[i]);
  return s;
}

inline Json presentation_json(const GroupPresentation& g) {
  Json j;
  j["d"] = g.d;
  j["generators"] = g.generators;
  Json rels = Json::array();
  for (const auto& r : g.relations) rels.push_back({{"lhs", commutator_text(g, r.lhs)}, {"rhs", rhs_text(g, r)}});
  j["relations"] = rels;
  if (g.form) {
    j["form"] = g.form->coefficients();
    j["base_form"] = g.base_form->coefficients();
    j["power"] = g.power;
    Json b = Json::array();
    for (std::size_t i = 0; i < g.scharlau_b->rows(); ++i) {
      Json row = Json::array();
      for (std::size_t k = 0; k < g.scharlau_b->cols(); ++k) row.push_back((*g.scharlau_b)(i, k));
      b.push_back(row);
    }
    j["scharlau_b"] = b;
  }
  return j;
}

}  // namespace detail

struct Streams {
  std::ostream& out;
  std::ostream& err;
};

inline int cmd_count(Streams io, std::optional<std::int64_t> p, std::int64_t n, std::optional<std::int64_t> p_from,
                     std::optional<std::int64_t> p_to, const std::string& format) {
  const bool range = p_from.has_value() || p_to.has_value();
  if (range == p.has_value()) throw std::invalid_argument("count: give either --p or both --p-from and --p-to");
  if (range && !(p_from && p_to)) throw std::invalid_argument("count: --p-from and --p-to go together");
  if (!range) {
    if (*p < 2) throw std::invalid_argument("count: --p must be prime");
    const auto r = orbit_count(static_cast<std::uint64_t>(*p), n);
    if (format == "json") {
      io.out << detail::report_json(r, true).dump() << "\n";
    } else if (format == "csv") {
      io.out << "p,n,a,b,c,d,group_order,orbits\n";
      detail::report_csv_row(io.out, r);
    } else {
      io.out << "p = " << r.p << ", n = " << r.n << "\n";
      if (r.terms) {
        io.out << "a = " << detail::str(r.terms->a) << "\nb = " << detail::str(r.terms->b)
               << "\nc = " << detail::str(r.terms->c) << "\nd = " << detail::str(r.terms->d) << "\n";
      } else {
        io.out << "(n <= 2: single orbit, no Burnside terms)\n";
      }
      io.out << "|GL(2,p)| = " << r.group_order << "\norbits = " << r.orbit_count << "\n";
    }
    return 0;
  }

  if (*p_from > *p_to) throw std::invalid_argument("count: empty prime range");
  std::vector<OrbitCountReport> rows;
  for (auto q : primes_between(*p_from, *p_to)) rows.push_back(orbit_count(static_cast<std::uint64_t>(q), n));
  if (format == "json") {
    Json j;
    j["n"] = n;
    j["rows"] = Json::array();
    for (const auto& r : rows) j["rows"].push_back(detail::report_json(r, false));
    io.out << j.dump() << "\n";
  } else if (format == "csv") {
    io.out << "p,n,a,b,c,d,group_order,orbits\n";
    for (const auto& r : rows) detail::report_csv_row(io.out, r);
  } else {
    io.out << "n = " << n << "\n" << std::setw(8) << "p" << "  orbits\n";
    for (const auto& r : rows) io.out << std::setw(8) << r.p << "  " << r.orbit_count << "\n";
  }
  return 0;
}

inline int cmd_fix(Streams io, std::uint64_t p, std::int64_t n, std::uint64_t bound, const std::string& format) {
  if (n < 1) throw std::invalid_argument("fix: --n must be >= 1");
  const auto families = class_families(p);
  std::optional<std::vector<BinaryForm>> forms;
  if (n >= 3 && ipow(BigInt(p), static_cast<std::uint64_t>(n)) <= bound) {
    forms = enumerate_irreducible_forms(p, static_cast<unsigned>(n), bound);
  }
  bool mismatch = false;
  Json rows = Json::array();
  std::ostringstream table, csv;
  table << std::left << std::setw(14) << "kind" << std::setw(6) << "e" << std::setw(10) << "classes" << std::setw(10)
        << "size" << std::setw(16) << "representative" << std::setw(14) << "predicted" << "brute\n";
  csv << "kind,e,class_count,class_size,representative,predicted,brute\n";
  for (const auto& fam : families) {
    const Rational predicted = predicted_fix(p, n, fam);
    std::optional<std::uint64_t> brute;
    if (forms) brute = fix_count(*forms, fam.representative, static_cast<unsigned>(n));
    if (brute && Rational(*brute) != predicted) mismatch = true;
    const std::string brute_s = brute ? std::to_string(*brute) : "-";
    table << std::setw(14) << to_string(fam.kind) << std::setw(6) << fam.e << std::setw(10) << fam.class_count.str()
          << std::setw(10) << fam.class_size.str() << std::setw(16) << fam.representative.to_string() << std::setw(14)
          << predicted.str() << brute_s << (brute && Rational(*brute) != predicted ? "  MISMATCH" : "") << "\n";
    csv << to_string(fam.kind) << "," << fam.e << "," << fam.class_count.str() << "," << fam.class_size.str() << ",\""
        << fam.representative.to_string() << "\"," << predicted.str() << "," << (brute ? brute_s : "") << "\n";
    Json row;
    row["kind"] = to_string(fam.kind);
    row["e"] = fam.e;
    row["class_count"] = fam.class_count.str();
    row["class_size"] = fam.class_size.str();
    row["representative"] = detail::matrix_json(fam.representative);
    row["predicted"] = predicted.str();
    row["brute"] = brute ? Json(std::to_string(*brute)) : Json(nullptr);
    rows.push_back(row);
  }
  if (format == "json") {
    io.out << Json{{"p", p}, {"n", n}, {"families", rows}, {"agrees", !mismatch}}.dump() << "\n";
  } else if (format == "csv") {
    io.out << csv.str();
  } else {
    io.out << "p = " << p << ", n = " << n << "\n" << table.str();
    if (!forms) io.out << "(brute force skipped: n < 3 or p^n above bound " << bound << ")\n";
  }
  if (mismatch) {
    io.err << "internal invariant violation: predicted fixed-point counts disagree with brute force\n";
    return kInternalError;
  }
  return 0;
}

inline int cmd_porc(Streams io, std::int64_t n, const std::string& format) {
  const auto table = porc_table(n);
  if (format == "json") {
    Json classes = Json::array();
    for (const auto& [r, poly] : table.classes) {
      Json num = Json::array();
      for (const auto& c : poly.scaled_numerator()) num.push_back(c.str());
      classes.push_back({{"r", r}, {"num", num}, {"den", poly.common_denominator().str()}});
    }
    io.out << Json{{"n", n}, {"classes", classes}}.dump() << "\n";
  } else if (format == "csv") {
    io.out << "r,formula\n";
    for (const auto& [r, poly] : table.classes) io.out << r << "," << poly.to_string() << "\n";
  } else {
    for (const auto& [r, poly] : table.classes) io.out << "p ≡ " << r << " (mod " << n << "): " << poly.to_string() << "\n";
  }
  std::string outside;
  for (auto q : prime_factors(n)) outside += (outside.empty() ? "" : ", ") + std::to_string(q);
  io.err << "note: primes dividing " << n << " (" << outside << ") are not covered by the table; use `count`\n";
  return 0;
}

inline int cmd_oracle(Streams io, std::uint64_t p, std::int64_t n, const std::string& mode, std::uint64_t bound,
                      const std::string& format) {
  if (n < 3) throw std::invalid_argument("oracle: --n must be >= 3");
  OracleOptions opts;
  opts.bound = bound;
  const BigInt brute = mode == "burnside" ? orbit_count_burnside_brute(p, static_cast<unsigned>(n), opts)
                                          : BigInt(orbit_count_bfs(p, static_cast<unsigned>(n), opts).count());
  const BigInt formula = orbit_count(p, n).orbit_count;
  const bool agrees = brute == formula;
  if (format == "json") {
    io.out << Json{{"p", p}, {"n", n},           {"mode", mode}, {"orbits", brute.str()},
                   {"formula", formula.str()},   {"agrees", agrees}}
                  .dump()
           << "\n";
  } else if (format == "csv") {
    io.out << "p,n,mode,orbits,formula,agrees\n"
           << p << "," << n << "," << mode << "," << brute << "," << formula << "," << (agrees ? "true" : "false") << "\n";
  } else {
    io.out << "orbits = " << brute << (agrees ? " (formula agrees)" : " (formula disagrees: " + formula.str() + ")")
           << "\n";
  }
  if (!agrees) {
    io.err << "internal invariant violation: oracle and formula disagree\n";
    return kInternalError;
  }
  return 0;
}

inline int cmd_reps(Streams io, std::uint64_t p, std::int64_t n, std::uint64_t bound, const std::string& format) {
  if (n < 1) throw std::invalid_argument("reps: --n must be >= 1");
  const PrimeField fp(p);
  std::vector<std::pair<BinaryForm, std::uint64_t>> reps;  // representative, orbit size
  if (n == 1) {
    reps.emplace_back(BinaryForm(fp, {1, 0}), p + 1);
  } else {
    const auto part = orbit_partition(p, static_cast<unsigned>(n), bound);
    for (const auto& orbit : part.orbits) reps.emplace_back(orbit.front(), orbit.size());
  }
  if (format == "json") {
    Json orbits = Json::array();
    for (const auto& [f, size] : reps) orbits.push_back({{"representative", f.coefficients()}, {"size", size}});
    io.out << Json{{"p", p}, {"n", n}, {"orbits", orbits}}.dump() << "\n";
  } else if (format == "csv") {
    io.out << "orbit,size,coefficients\n";
    for (std::size_t i = 0; i < reps.size(); ++i) {
      io.out << i + 1 << "," << reps[i].second << "," << detail::coefficient_row(reps[i].first) << "\n";
    }
  } else {
    for (const auto& [f, size] : reps) {
      io.out << detail::coefficient_row(f) << "  # " << f.to_string() << ", orbit size " << size << "\n";
    }
  }
  return 0;
}

inline int cmd_groups(Streams io, std::uint64_t p, std::int64_t d, std::uint64_t bound, const std::string& format) {
  if (p == 2) io.err << "warning: the group correspondence assumes p > 2; emitting anyway\n";
  std::vector<GroupPresentation> groups;
  if (d % 2 == 1) {
    groups.push_back(odd_presentation(p, d));
  } else {
    groups = even_presentations(p, d, bound);
  }
  if (format == "json") {
    Json arr = Json::array();
    for (const auto& g : groups) arr.push_back(detail::presentation_json(g));
    io.out << Json{{"p", p}, {"d", d}, {"count", groups.size()}, {"groups", arr}}.dump() << "\n";
  } else if (format == "gap") {
    for (std::size_t i = 0; i < groups.size(); ++i) io.out << (i ? "\n" : "") << render_gap(groups[i]);
  } else {
    io.out << groups.size() << " indecomposable (" << d << ",2) group" << (groups.size() == 1 ? "" : "s") << " for p = "
           << p << "\n";
    for (std::size_t i = 0; i < groups.size(); ++i) io.out << "\n#" << i + 1 << " " << render_text(groups[i]);
  }
  return 0;
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orbits of irreducible binary forms over GF(p) under GL(2,p)", "formcount"};
  app.require_subcommand(1);

  std::optional<std::int64_t> p, p_from, p_to;
  std::int64_t n = 0, d = 0;
  std::optional<std::uint64_t> bound;
  std::string format = "text", mode = "bfs";
  const std::vector<std::string> tabular{"text", "json", "csv"};

  auto* count = app.add_subcommand("count", "Orbit count from the closed formula");
  count->add_option("--p", p, "Prime");
  count->add_option("--n", n, "Degree")->required();
  count->add_option("--p-from", p_from, "First prime of a range");
  count->add_option("--p-to", p_to, "Last prime of a range");
  count->add_option("--format", format)->check(CLI::IsMember(tabular));

  auto* fix = app.add_subcommand("fix", "Per-class fixed-point counts, formula and brute force");
  fix->add_option("--p", p, "Prime")->required();
  fix->add_option("--n", n, "Degree")->required();
  fix->add_option("--bound", bound, "Enumeration bound on p^n");
  fix->add_option("--format", format)->check(CLI::IsMember(tabular));

  auto* porc = app.add_subcommand("porc", "Orbit-count polynomials per residue class of p mod n");
  porc->add_option("--n", n, "Degree")->required();
  porc->add_option("--format", format)->check(CLI::IsMember(tabular));

  auto* oracle = app.add_subcommand("oracle", "Brute-force orbit count compared with the formula");
  oracle->add_option("--p", p, "Prime")->required();
  oracle->add_option("--n", n, "Degree")->required();
  oracle->add_option("--mode", mode)->check(CLI::IsMember({"bfs", "burnside"}));
  oracle->add_option("--bound", bound, "Enumeration bound on p^n");
  oracle->add_option("--format", format)->check(CLI::IsMember(tabular));

  auto* reps = app.add_subcommand("reps", "Orbit representatives as coefficient rows");
  reps->add_option("--p", p, "Prime")->required();
  reps->add_option("--n", n, "Degree")->required();
  reps->add_option("--bound", bound, "Enumeration bound on p^n");
  reps->add_option("--format", format)->check(CLI::IsMember(tabular));

  auto* groups = app.add_subcommand("groups", "Presentations of the indecomposable (d,2) groups");
  groups->add_option("--p", p, "Prime")->required();
  groups->add_option("--d", d, "Number of generators")->required();
  groups->add_option("--bound", bound, "Enumeration bound on p^m");
  groups->add_option("--format", format)->check(CLI::IsMember({"text", "json", "gap"}));

  std::vector<const char*> argv{"formcount"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsageError;
  }

  const Streams io{out, err};
  try {
    auto prime = [&]() {
      if (!p || !is_prime(*p)) throw std::invalid_argument("--p must be a prime");
      return static_cast<std::uint64_t>(*p);
    };
    if (count->parsed()) return cmd_count(io, p, n, p_from, p_to, format);
    if (fix->parsed()) return cmd_fix(io, prime(), n, resolve_bound(bound), format);
    if (porc->parsed()) return cmd_porc(io, n, format);
    if (oracle->parsed()) return cmd_oracle(io, prime(), n, mode, resolve_bound(bound), format);
    if (reps->parsed()) return cmd_reps(io, prime(), n, resolve_bound(bound), format);
    if (groups->parsed()) return cmd_groups(io, prime(), d, resolve_bound(bound), format);
  } catch (const InvariantViolation& e) {
    err << "internal invariant violation: " << e.what() << "\n";
    return kInternalError;
  } catch (const BoundExceeded& e) {
    err << "refused: " << e.what() << " (raise --bound or FORMCOUNT_BOUND)\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
  return kUsageError;
}

}  // namespace formcount::cli
