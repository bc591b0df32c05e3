#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pealab/core.hpp"

namespace pealab {

// Finite algebra (X; ~, ~~, /\, 1) given by total operation tables over
// carrier indices 0..size-1.  `sim` is the left equality operation ~,
// `bsim` the right one (written ~~ here), `meet` the semilattice
// operation, `top` the index of the constant 1.  Element names are
// display-only and never enter equality of algebras.
struct FiniteAlgebra {
  int size = 0;
  std::vector<std::string> names;
  int top = 0;
  Table meet;
  Table sim;
  Table bsim;

  friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;
};

// Table equality under the identity mapping of carriers; names ignored.
inline bool same_tables(const FiniteAlgebra& a, const FiniteAlgebra& b) {
  return a.size == b.size && a.top == b.top && a.meet == b.meet && a.sim == b.sim &&
         a.bsim == b.bsim;
}

namespace detail {

inline void require_square(const Table& t, int n, const char* name) {
  if (t.size() != n) throw input_error(std::string("table ") + name + " is not " +
                                       std::to_string(n) + "x" + std::to_string(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (t(a, b) < 0 || t(a, b) >= n)
        throw input_error(std::string("table ") + name + " entry (" + std::to_string(a) + "," +
                          std::to_string(b) + ") is out of range");
}

}  // namespace detail

// Structural validation only (shapes and index ranges); axiom checks are
// separate.  Throws input_error.
inline void validate(const FiniteAlgebra& alg) {
  if (alg.size <= 0) throw input_error("carrier must have at least one element");
  if (alg.top < 0 || alg.top >= alg.size) throw input_error("top index out of range");
  if (!alg.names.empty() && static_cast<int>(alg.names.size()) != alg.size)
    throw input_error("name list length does not match carrier size");
  detail::require_square(alg.meet, alg.size, "meet");
  detail::require_square(alg.sim, alg.size, "sim");
  detail::require_square(alg.bsim, alg.size, "bsim");
}

// Derived order: x <= y iff x /\ y = x.
inline bool leq(const FiniteAlgebra& alg, int x, int y) {
  if (x < 0 || x >= alg.size || y < 0 || y >= alg.size)
    throw input_error("leq: element index out of range");
  return alg.meet(x, y) == x;
}

// F1: (X; /\, 1) is a meet-semilattice with top as greatest element.
// Failure ids: idempotence, commutativity, associativity, top.
inline AxiomReport check_semilattice(const FiniteAlgebra& alg, bool fail_fast = false) {
  validate(alg);
  const int n = alg.size;
  const Table& m = alg.meet;
  AxiomReport report;

  for (int x = 0; x < n; ++x) {
    if (m(x, x) != x) {
      report.add("idempotence", {x});
      if (fail_fast) return report;
    }
  }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (m(x, y) != m(y, x)) {
        report.add("commutativity", {x, y});
        if (fail_fast) return report;
      }
    }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (m(m(x, y), z) != m(x, m(y, z))) {
          report.add("associativity", {x, y, z});
          if (fail_fast) return report;
        }
      }
  for (int x = 0; x < n; ++x) {
    if (m(x, alg.top) != x) {
      report.add("top", {x});
      if (fail_fast) return report;
    }
  }
  return report;
}

namespace detail {

// Merges semilattice failures into a host report under a single axiom id.
inline bool fold_semilattice(const FiniteAlgebra& alg, AxiomReport& report, const char* id,
                             bool fail_fast) {
  AxiomReport sl = check_semilattice(alg, fail_fast);
  for (auto& f : sl.failures) report.add(id, f.witnesses);
  return sl.verdict;
}

}  // namespace detail

// Axioms F1-F7 of the revised notion of a pseudo equality algebra.  F4 is
// checked in its equational form (four inequalities over all triples),
// which keeps the scan branch-free.  Failures carry ids F1..F7 and the
// lexicographically first witnesses come first within each axiom.
inline AxiomReport check_new_axioms(const FiniteAlgebra& alg, bool fail_fast = false) {
  AxiomReport report;
  if (!detail::fold_semilattice(alg, report, "F1", fail_fast)) {
    // Order-dependent axioms are meaningless without a semilattice.
    return report;
  }

  const int n = alg.size;
  const int top = alg.top;
  const Table& m = alg.meet;
  const Table& s = alg.sim;
  const Table& t = alg.bsim;
  auto le = [&](int x, int y) { return m(x, y) == x; };

  for (int a = 0; a < n; ++a) {
    if (s(a, a) != top || t(a, a) != top) {
      report.add("F2", {a});
      if (fail_fast) return report;
    }
  }
  for (int a = 0; a < n; ++a) {
    if (s(a, top) != a || t(top, a) != a) {
      report.add("F3", {a});
      if (fail_fast) return report;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int abc = m(m(a, b), c);
        const int bc = m(b, c);
        // Equational form of F4 over the triple (a, b, c).
        if (!le(s(abc, c), s(bc, c)) || !le(s(abc, c), s(abc, bc)) ||
            !le(t(c, abc), t(c, bc)) || !le(t(c, abc), t(bc, abc))) {
          report.add("F4", {a, b, c});
          if (fail_fast) return report;
        }
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (!le(s(a, b), s(m(a, c), m(b, c))) || !le(t(a, b), t(m(a, c), m(b, c)))) {
          report.add("F5", {a, b, c});
          if (fail_fast) return report;
        }
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (!le(s(a, b), t(s(c, a), s(c, b))) || !le(t(a, b), s(t(a, c), t(b, c)))) {
          report.add("F6", {a, b, c});
          if (fail_fast) return report;
        }
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (!le(s(a, b), s(s(a, c), s(b, c))) || !le(t(a, b), t(t(c, a), t(c, b)))) {
          report.add("F7", {a, b, c});
          if (fail_fast) return report;
        }
      }
  return report;
}

// Original axiom system F1'-F7' (the one that collapses: it forces
// sim = bsim).  Kept so the collapse can be demonstrated by search.
inline AxiomReport check_jk_axioms(const FiniteAlgebra& alg, bool fail_fast = false) {
  AxiomReport report;
  if (!detail::fold_semilattice(alg, report, "F1'", fail_fast)) return report;

  const int n = alg.size;
  const int top = alg.top;
  const Table& m = alg.meet;
  const Table& s = alg.sim;
  const Table& t = alg.bsim;
  auto le = [&](int x, int y) { return m(x, y) == x; };

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (s(a, b) != s(b, a) || t(a, b) != t(b, a)) {
        report.add("F2'", {a, b});
        if (fail_fast) return report;
      }
    }
  for (int a = 0; a < n; ++a) {
    if (s(a, a) != top || t(a, a) != top) {
      report.add("F3'", {a});
      if (fail_fast) return report;
    }
  }
  for (int a = 0; a < n; ++a) {
    if (s(a, top) != a || t(a, top) != a) {
      report.add("F4'", {a});
      if (fail_fast) return report;
    }
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (!le(a, b) || !le(b, c)) continue;
        if (!le(s(a, c), s(b, c)) || !le(s(a, c), s(a, b)) || !le(t(c, a), t(c, b)) ||
            !le(t(c, a), t(b, a))) {
          report.add("F5'", {a, b, c});
          if (fail_fast) return report;
        }
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (!le(s(a, b), s(m(a, c), m(b, c))) || !le(t(a, b), t(m(a, c), m(b, c)))) {
          report.add("F6'", {a, b, c});
          if (fail_fast) return report;
        }
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (!le(s(a, b), t(s(a, c), s(b, c))) || !le(t(a, b), s(t(a, c), t(b, c)))) {
          report.add("F7'", {a, b, c});
          if (fail_fast) return report;
        }
      }
  return report;
}

// For a model of the original axioms, sim and bsim must coincide; this
// returns the first differing cell if they do not (which would refute
// the collapse argument and deserves a loud failure upstream).
inline std::optional<std::pair<int, int>> collapse_witness(const FiniteAlgebra& alg) {
  if (!check_jk_axioms(alg, /*fail_fast=*/true).verdict)
    throw contract_error("collapse_witness: algebra does not satisfy the original axioms");
  for (int a = 0; a < alg.size; ++a)
    for (int b = 0; b < alg.size; ++b)
      if (alg.sim(a, b) != alg.bsim(a, b)) return std::make_pair(a, b);
  return std::nullopt;
}

namespace detail {

inline bool commutative(const Table& t) {
  for (int a = 0; a < t.size(); ++a)
    for (int b = 0; b < a; ++b)
      if (t(a, b) != t(b, a)) return false;
  return true;
}

}  // namespace detail

// True iff the (valid) pseudo equality algebra is in fact an equality
// algebra: sim = bsim as tables and sim commutative.  Two provable
// consequences are asserted on every call: both operations commutative
// forces sim = bsim, and 1~a = a = a~~1 for all a forces sim = bsim.
inline bool is_equality_algebra(const FiniteAlgebra& alg) {
  const bool equal_tables = alg.sim == alg.bsim;
  const bool sim_comm = detail::commutative(alg.sim);
  const bool bsim_comm = detail::commutative(alg.bsim);

  if (sim_comm && bsim_comm && !equal_tables)
    throw theorem_violation(
        "is_equality_algebra: both operations commutative but tables differ");

  bool mirrored_units = true;
  for (int a = 0; a < alg.size && mirrored_units; ++a)
    if (alg.sim(alg.top, a) != a || alg.bsim(a, alg.top) != a) mirrored_units = false;
  if (mirrored_units && !equal_tables)
    throw theorem_violation(
        "is_equality_algebra: 1~a = a = a~~1 holds but tables differ");

  return equal_tables && sim_comm;
}

}  // namespace pealab
