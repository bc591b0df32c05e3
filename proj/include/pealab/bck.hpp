#pragma once

#include <array>
#include <string>
#include <vector>

#include "pealab/algebra.hpp"
#include "pealab/core.hpp"
#include "pealab/derived.hpp"

namespace pealab {

// G refused a pseudo BCK-meet-semilattice because the meet-compatibility
// condition (xii) fails.  Carries the first violating triple (a, b, c)
// of the failed inequality, as scanned.
struct xii_rejection : std::runtime_error {
  std::array<int, 3> witness;
  std::string inequality;  // "imp" or "simp" side

  xii_rejection(std::array<int, 3> w, std::string side)
      : std::runtime_error("condition (xii) fails at witness (" + std::to_string(w[0]) + "," +
                           std::to_string(w[1]) + "," + std::to_string(w[2]) + ") on the " +
                           side + " side"),
        witness(w),
        inequality(std::move(side)) {}
};

// Pseudo BCK-meet-semilattice (X; ->, ~>, /\, 1) as operation tables.
struct BckAlgebra {
  int size = 0;
  std::vector<std::string> names;
  int top = 0;
  Table meet;
  Table imp;
  Table simp;

  friend bool operator==(const BckAlgebra&, const BckAlgebra&) = default;
};

inline bool same_tables(const BckAlgebra& a, const BckAlgebra& b) {
  return a.size == b.size && a.top == b.top && a.meet == b.meet && a.imp == b.imp &&
         a.simp == b.simp;
}

inline void validate(const BckAlgebra& alg) {
  if (alg.size <= 0) throw input_error("carrier must have at least one element");
  if (alg.top < 0 || alg.top >= alg.size) throw input_error("top index out of range");
  if (!alg.names.empty() && static_cast<int>(alg.names.size()) != alg.size)
    throw input_error("name list length does not match carrier size");
  detail::require_square(alg.meet, alg.size, "meet");
  detail::require_square(alg.imp, alg.size, "imp");
  detail::require_square(alg.simp, alg.size, "simp");
}

inline bool leq(const BckAlgebra& alg, int x, int y) {
  if (x < 0 || x >= alg.size || y < 0 || y >= alg.size)
    throw input_error("leq: element index out of range");
  return alg.meet(x, y) == x;
}

namespace detail {

inline bool fold_semilattice(const BckAlgebra& alg, AxiomReport& report, bool fail_fast) {
  FiniteAlgebra shim{alg.size, {}, alg.top, alg.meet, Table(alg.size, alg.top),
                     Table(alg.size, alg.top)};
  AxiomReport sl = check_semilattice(shim, fail_fast);
  for (auto& f : sl.failures) report.add("meet-" + f.axiom_id, f.witnesses);
  return sl.verdict;
}

}  // namespace detail

// Axioms PBCK1-PBCK4 plus the variety identities SL1, SL2, plus the
// requirement that the implication order (a <= b iff a->b = 1, iff
// a~>b = 1) coincides with the meet order.  Derived properties P1-P4 are
// checked separately by check_pbck_props.
inline AxiomReport check_pbck(const BckAlgebra& alg, bool fail_fast = false) {
  validate(alg);
  AxiomReport report;
  if (!detail::fold_semilattice(alg, report, fail_fast)) return report;

  const int n = alg.size;
  const int top = alg.top;
  const Table& m = alg.meet;
  const Table& f = alg.imp;
  const Table& g = alg.simp;
  auto le = [&](int x, int y) { return m(x, y) == x; };

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const bool lo = le(a, b);
      if ((f(a, b) == top) != lo || (g(a, b) == top) != lo) {
        report.add("order", {a, b});
        if (fail_fast) return report;
      }
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (g(f(a, b), g(f(b, c), f(a, c))) != top ||
            f(g(a, b), f(g(b, c), g(a, c))) != top) {
          report.add("PBCK1", {a, b, c});
          if (fail_fast) return report;
        }
      }
  for (int a = 0; a < n; ++a)
    if (f(top, a) != a || g(top, a) != a) {
      report.add("PBCK2", {a});
      if (fail_fast) return report;
    }
  for (int a = 0; a < n; ++a)
    if (f(a, top) != top || g(a, top) != top) {
      report.add("PBCK3", {a});
      if (fail_fast) return report;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (a == b) continue;
      if ((f(a, b) == top && f(b, a) == top) || (g(a, b) == top && g(b, a) == top)) {
        report.add("PBCK4", {a, b});
        if (fail_fast) return report;
      }
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (m(a, g(f(a, b), b)) != a) {
        report.add("SL1", {a, b});
        if (fail_fast) return report;
      }
      if (f(m(a, b), b) != top) {
        report.add("SL2", {a, b});
        if (fail_fast) return report;
      }
    }
  return report;
}

// P1-P4: monotonicity and composition laws that every pseudo BCK-algebra
// provably satisfies.  Kept out of check_pbck so that axiom verdicts and
// consequence verdicts never mix.  P3 and P4 are the exchange images of
// the two transitivity axioms: x->y <= (z->x)->(z->y) and
// x~>y <= (z~>x)~>(z~>y); giving P4 an outer -> instead breaks it on
// models whose two implications genuinely differ.
inline AxiomReport check_pbck_props(const BckAlgebra& alg, bool fail_fast = false) {
  const int n = alg.size;
  const Table& m = alg.meet;
  const Table& f = alg.imp;
  const Table& g = alg.simp;
  auto le = [&](int x, int y) { return m(x, y) == x; };
  AxiomReport report;

  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (!le(x, y)) continue;
        if (!le(f(z, x), f(z, y)) || !le(g(z, x), g(z, y))) {
          report.add("P1", {x, y, z});
          if (fail_fast) return report;
        }
      }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z) {
        if (!le(x, y)) continue;
        if (!le(f(y, z), f(x, z)) || !le(g(y, z), g(x, z))) {
          report.add("P2", {x, y, z});
          if (fail_fast) return report;
        }
      }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (!le(f(x, y), f(f(z, x), f(z, y)))) {
          report.add("P3", {x, y, z});
          if (fail_fast) return report;
        }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (!le(g(x, y), g(g(z, x), g(z, y)))) {
          report.add("P4", {x, y, z});
          if (fail_fast) return report;
        }
  return report;
}

// Meet absorption a->(a/\b) = a->b (and the ~> twin).  Provable under
// condition (xii); fails on e.g. the built-in five-element model.
inline AxiomReport check_meet_absorption(const BckAlgebra& alg, bool fail_fast = false) {
  AxiomReport report;
  for (int a = 0; a < alg.size; ++a)
    for (int b = 0; b < alg.size; ++b) {
      const int ab = alg.meet(a, b);
      if (alg.imp(a, ab) != alg.imp(a, b) || alg.simp(a, ab) != alg.simp(a, b)) {
        report.add("absorption", {a, b});
        if (fail_fast) return report;
      }
    }
  return report;
}

// Condition (xii): b->a <= (b/\c)->(a/\c) and b~>a <= (b/\c)~>(a/\c) for
// all triples.  This is exactly what separates bridgeable pseudo
// BCK-meet-semilattices from the rest.  Witness tuples list the values
// of (a, b, c) as the inequality is written above; ids xii-imp/xii-simp
// tell the two halves apart.
inline AxiomReport check_condition_xii(const BckAlgebra& alg, bool fail_fast = false) {
  const int n = alg.size;
  const Table& m = alg.meet;
  auto le = [&](int x, int y) { return m(x, y) == x; };
  AxiomReport report;

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (!le(alg.imp(b, a), alg.imp(m(b, c), m(a, c)))) {
          report.add("xii-imp", {a, b, c});
          if (fail_fast) return report;
        }
        if (!le(alg.simp(b, a), alg.simp(m(b, c), m(a, c)))) {
          report.add("xii-simp", {a, b, c});
          if (fail_fast) return report;
        }
      }
  return report;
}

// F: pseudo equality algebra -> pseudo BCK-meet-semilattice, by the
// derived implications.  The result provably satisfies the axioms and
// condition (xii); both are asserted.
inline BckAlgebra functor_F(const FiniteAlgebra& alg) {
  if (!check_new_axioms(alg, /*fail_fast=*/true).verdict)
    throw contract_error("functor_F: input is not a pseudo equality algebra");
  DerivedTables d = derive(alg);
  BckAlgebra out{alg.size, alg.names, alg.top, alg.meet, std::move(d.imp), std::move(d.simp)};
  if (!check_pbck(out, /*fail_fast=*/true).verdict)
    throw theorem_violation("functor_F: image fails the BCK axioms");
  if (!check_condition_xii(out, /*fail_fast=*/true).verdict)
    throw theorem_violation("functor_F: image fails condition (xii)");
  return out;
}

// G: pseudo BCK-meet-semilattice satisfying (xii) -> pseudo equality
// algebra, by a~b = b->a and a~~b = a~>b.  Inputs failing (xii) are
// rejected with the first violating triple; the result is asserted to
// satisfy the pseudo equality axioms.
inline FiniteAlgebra functor_G(const BckAlgebra& alg) {
  if (!check_pbck(alg, /*fail_fast=*/true).verdict)
    throw contract_error("functor_G: input is not a pseudo BCK-meet-semilattice");
  AxiomReport xii = check_condition_xii(alg, /*fail_fast=*/true);
  if (!xii.verdict) {
    const AxiomFailure& f = xii.failures.front();
    throw xii_rejection({f.witnesses[0], f.witnesses[1], f.witnesses[2]},
                        f.axiom_id == "xii-imp" ? "imp" : "simp");
  }
  const int n = alg.size;
  FiniteAlgebra out{n, alg.names, alg.top, alg.meet, Table(n), Table(n)};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      out.sim(a, b) = alg.imp(b, a);
      out.bsim(a, b) = alg.simp(a, b);
    }
  if (!check_new_axioms(out, /*fail_fast=*/true).verdict)
    throw theorem_violation("functor_G: image fails the pseudo equality axioms");
  return out;
}

// F(G(F(A))) = F(A), provable for every pseudo equality algebra A.
inline bool roundtrip_FGF(const FiniteAlgebra& alg) {
  BckAlgebra fa = functor_F(alg);
  return same_tables(functor_F(functor_G(fa)), fa);
}

// F(G(B)) = B, provable for every B satisfying condition (xii).
inline bool roundtrip_FG(const BckAlgebra& alg) {
  return same_tables(functor_F(functor_G(alg)), alg);
}

// A is invariant iff it is fixed by G after F, iff it lies in G's image.
inline bool is_invariant(const FiniteAlgebra& alg) {
  return same_tables(functor_G(functor_F(alg)), alg);
}

// Built-in five-element pseudo BCK-meet-semilattice over 0 < a,c < 1 and
// 0 < b,c < 1 with a, b incomparable.  It satisfies the BCK axioms but
// not condition (xii), so G must refuse it.  The meet table is the
// unique one consistent with the implication order.
inline BckAlgebra ciungu5() {
  BckAlgebra alg;
  alg.size = 5;
  alg.names = {"0", "a", "b", "c", "1"};
  alg.top = 4;
  alg.meet = Table(5);
  alg.imp = Table(5);
  alg.simp = Table(5);
  const int meet[5][5] = {{0, 0, 0, 0, 0},
                          {0, 1, 0, 1, 1},
                          {0, 0, 2, 2, 2},
                          {0, 1, 2, 3, 3},
                          {0, 1, 2, 3, 4}};
  const int imp[5][5] = {{4, 4, 4, 4, 4},
                         {0, 4, 2, 4, 4},
                         {1, 1, 4, 4, 4},
                         {0, 1, 2, 4, 4},
                         {0, 1, 2, 3, 4}};
  const int simp[5][5] = {{4, 4, 4, 4, 4},
                          {2, 4, 2, 4, 4},
                          {0, 1, 4, 4, 4},
                          {0, 1, 2, 4, 4},
                          {0, 1, 2, 3, 4}};
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) {
      alg.meet(i, j) = meet[i][j];
      alg.imp(i, j) = imp[i][j];
      alg.simp(i, j) = simp[i][j];
    }
  return alg;
}

}  // namespace pealab
