#pragma once

#include "pealab/algebra.hpp"
#include "pealab/core.hpp"

namespace pealab {

// Implications derived from a pseudo equality algebra:
//   a -> b  = (a /\ b) ~ a      (imp)
//   a ~> b  = a ~~ (a /\ b)     (simp)
struct DerivedTables {
  Table imp;
  Table simp;

  friend bool operator==(const DerivedTables&, const DerivedTables&) = default;
};

inline DerivedTables derive(const FiniteAlgebra& alg) {
  const int n = alg.size;
  DerivedTables d{Table(n), Table(n)};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      d.imp(a, b) = alg.sim(alg.meet(a, b), a);
      d.simp(a, b) = alg.bsim(a, alg.meet(a, b));
    }
  return d;
}

// Monotonicity catalogue for the derived implications, items (i)-(iv):
// antitone in the first argument, monotone in the second, and the meet
// refinements behind both.  Conditional items are material implications
// over all triples.
inline AxiomReport check_monotonicity_laws(const FiniteAlgebra& alg, const DerivedTables& d,
                                           bool fail_fast = false) {
  const int n = alg.size;
  const Table& m = alg.meet;
  const Table& s = alg.sim;
  const Table& t = alg.bsim;
  auto le = [&](int x, int y) { return m(x, y) == x; };
  AxiomReport report;

  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int ab = m(a, b);
        const int abc = m(ab, c);
        if (!le(s(ab, a), s(abc, m(a, c))) || !le(d.imp(a, b), d.imp(m(a, c), b))) {
          report.add("(i)", {a, b, c});
          if (fail_fast) return report;
        }
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int ab = m(a, b);
        const int abc = m(ab, c);
        if (!le(t(a, ab), t(m(a, c), abc)) || !le(d.simp(a, b), d.simp(m(a, c), b))) {
          report.add("(ii)", {a, b, c});
          if (fail_fast) return report;
        }
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (!le(c, b)) continue;
        if (!le(d.imp(a, c), d.imp(a, b)) || !le(d.simp(a, c), d.simp(a, b))) {
          report.add("(iii)", {a, b, c});
          if (fail_fast) return report;
        }
      }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (!le(c, a)) continue;
        if (!le(d.imp(a, b), d.imp(c, b)) || !le(d.simp(a, b), d.simp(c, b))) {
          report.add("(iv)", {a, b, c});
          if (fail_fast) return report;
        }
      }
  return report;
}

// Property catalogue for the derived implications, items (i)-(xiii):
// order reflection, unit laws, exchange, residuation-style swap, and the
// meet-absorption identities.  All are provable for valid algebras, so a
// failure on a validated input indicates an implementation bug.
inline AxiomReport check_implication_laws(const FiniteAlgebra& alg, const DerivedTables& d,
                                          bool fail_fast = false) {
  const int n = alg.size;
  const int top = alg.top;
  const Table& m = alg.meet;
  const Table& s = alg.sim;
  const Table& t = alg.bsim;
  const Table& f = d.imp;
  const Table& g = d.simp;
  auto le = [&](int x, int y) { return m(x, y) == x; };
  AxiomReport report;
  auto fail = [&](const char* id, std::vector<int> w) { report.add(id, std::move(w)); };

  // (i) a~~b <= a~>b and b~a <= a->b
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!le(t(a, b), g(a, b)) || !le(s(b, a), f(a, b))) {
        fail("(i)", {a, b});
        if (fail_fast) return report;
      }
  // (ii) a <= ((c~a)~~c) /\ (c~(a~~c))
  for (int a = 0; a < n; ++a)
    for (int c = 0; c < n; ++c)
      if (!le(a, m(t(s(c, a), c), s(c, t(a, c))))) {
        fail("(ii)", {a, c});
        if (fail_fast) return report;
      }
  // (iii) a~~b = 1 or b~a = 1 implies a <= b
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if ((t(a, b) == top || s(b, a) == top) && !le(a, b)) {
        fail("(iii)", {a, b});
        if (fail_fast) return report;
      }
  // (iv) a~b = 1 implies c~a <= c~b; a~~b = 1 implies b~~c <= a~~c
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const bool first = s(a, b) != top || le(s(c, a), s(c, b));
        const bool second = t(a, b) != top || le(t(b, c), t(a, c));
        if (!first || !second) {
          fail("(iv)", {a, b, c});
          if (fail_fast) return report;
        }
      }
  // (v) a <= b iff a->b = 1 iff a~>b = 1
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const bool lo = le(a, b);
      if ((f(a, b) == top) != lo || (g(a, b) == top) != lo) {
        fail("(v)", {a, b});
        if (fail_fast) return report;
      }
    }
  // (vi) a~>1 = a~>a = a->a = a->1 = 1, 1~>a = a, 1->a = a
  for (int a = 0; a < n; ++a)
    if (g(a, top) != top || g(a, a) != top || f(a, a) != top || f(a, top) != top ||
        g(top, a) != a || f(top, a) != a) {
      fail("(vi)", {a});
      if (fail_fast) return report;
    }
  // (vii) a <= (b->a) /\ (b~>a)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!le(a, m(f(b, a), g(b, a)))) {
        fail("(vii)", {a, b});
        if (fail_fast) return report;
      }
  // (viii) a <= ((a->b)~>b) /\ ((a~>b)->b)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!le(a, m(g(f(a, b), b), f(g(a, b), b)))) {
        fail("(viii)", {a, b});
        if (fail_fast) return report;
      }
  // (ix) a->b <= (b->c)~>(a->c) and a~>b <= (b~>c)->(a~>c)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (!le(f(a, b), g(f(b, c), f(a, c))) || !le(g(a, b), f(g(b, c), g(a, c)))) {
          fail("(ix)", {a, b, c});
          if (fail_fast) return report;
        }
  // (x) a <= b->c iff b <= a~>c
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (le(a, f(b, c)) != le(b, g(a, c))) {
          fail("(x)", {a, b, c});
          if (fail_fast) return report;
        }
  // (xi) a->(b~>c) = b~>(a->c)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (f(a, g(b, c)) != g(b, f(a, c))) {
          fail("(xi)", {a, b, c});
          if (fail_fast) return report;
        }
  // (xii) b->a <= (b/\c)->(a/\c) and b~>a <= (b/\c)~>(a/\c)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (!le(f(b, a), f(m(b, c), m(a, c))) || !le(g(b, a), g(m(b, c), m(a, c)))) {
          fail("(xii)", {a, b, c});
          if (fail_fast) return report;
        }
  // (xiii) a->b = a->(a/\b) and a~>b = a~>(a/\b)
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (f(a, b) != f(a, m(a, b)) || g(a, b) != g(a, m(a, b))) {
        fail("(xiii)", {a, b});
        if (fail_fast) return report;
      }

  return report;
}

}  // namespace pealab
