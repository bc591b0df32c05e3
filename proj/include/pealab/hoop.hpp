#pragma once

#include <string>
#include <vector>

#include "pealab/algebra.hpp"
#include "pealab/core.hpp"

namespace pealab {

// Pseudo hoop (X; (.), ->, ~>, 1): an integral residuated structure whose
// derived meet is a /\ b = a (.) (a ~> b).
struct PseudoHoop {
  int size = 0;
  std::vector<std::string> names;
  int unit = 0;
  Table prod;
  Table imp;
  Table simp;

  friend bool operator==(const PseudoHoop&, const PseudoHoop&) = default;
};

inline void validate(const PseudoHoop& hoop) {
  if (hoop.size <= 0) throw input_error("carrier must have at least one element");
  if (hoop.unit < 0 || hoop.unit >= hoop.size) throw input_error("unit index out of range");
  if (!hoop.names.empty() && static_cast<int>(hoop.names.size()) != hoop.size)
    throw input_error("name list length does not match carrier size");
  detail::require_square(hoop.prod, hoop.size, "prod");
  detail::require_square(hoop.imp, hoop.size, "imp");
  detail::require_square(hoop.simp, hoop.size, "simp");
}

inline Table hoop_meet_table(const PseudoHoop& hoop) {
  Table m(hoop.size);
  for (int a = 0; a < hoop.size; ++a)
    for (int b = 0; b < hoop.size; ++b) m(a, b) = hoop.prod(a, hoop.simp(a, b));
  return m;
}

// Axioms (i)-(v) of a pseudo hoop, in the standard residuation form:
//   (i)   a(.)1 = 1(.)a = a
//   (ii)  a->a = 1 = a~>a
//   (iii) (a(.)b)->c = a->(b->c)
//   (iv)  (a(.)b)~>c = b~>(a~>c)
//   (v)   (a->b)(.)a = (b->a)(.)b = a(.)(a~>b) = b(.)(b~>a)
// When all five hold, the derived meet is provably a semilattice with
// the unit greatest; that consequence is asserted.
inline AxiomReport check_pseudo_hoop(const PseudoHoop& hoop, bool fail_fast = false) {
  validate(hoop);
  const int n = hoop.size;
  const int one = hoop.unit;
  const Table& p = hoop.prod;
  const Table& f = hoop.imp;
  const Table& g = hoop.simp;
  AxiomReport report;

  for (int a = 0; a < n; ++a)
    if (p(a, one) != a || p(one, a) != a) {
      report.add("(i)", {a});
      if (fail_fast) return report;
    }
  for (int a = 0; a < n; ++a)
    if (f(a, a) != one || g(a, a) != one) {
      report.add("(ii)", {a});
      if (fail_fast) return report;
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (f(p(a, b), c) != f(a, f(b, c))) {
          report.add("(iii)", {a, b, c});
          if (fail_fast) return report;
        }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (g(p(a, b), c) != g(b, g(a, c))) {
          report.add("(iv)", {a, b, c});
          if (fail_fast) return report;
        }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int v = p(f(a, b), a);
      if (p(f(b, a), b) != v || p(a, g(a, b)) != v || p(b, g(b, a)) != v) {
        report.add("(v)", {a, b});
        if (fail_fast) return report;
      }
    }

  if (report.verdict) {
    FiniteAlgebra shim{n, {}, one, hoop_meet_table(hoop), Table(n, one), Table(n, one)};
    if (!check_semilattice(shim, /*fail_fast=*/true).verdict)
      throw theorem_violation("check_pseudo_hoop: derived meet is not a semilattice with top");
  }
  return report;
}

// Pseudo equality algebra induced by a pseudo hoop:
//   a ~ b = b -> a,  a ~~ b = a ~> b,  a /\ b = a (.) (a ~> b).
// The image provably satisfies the pseudo equality axioms; asserted.
inline FiniteAlgebra hoop_to_pea(const PseudoHoop& hoop) {
  if (!check_pseudo_hoop(hoop, /*fail_fast=*/true).verdict)
    throw contract_error("hoop_to_pea: input is not a pseudo hoop");
  const int n = hoop.size;
  FiniteAlgebra out{n, hoop.names, hoop.unit, hoop_meet_table(hoop), Table(n), Table(n)};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      out.sim(a, b) = hoop.imp(b, a);
      out.bsim(a, b) = hoop.simp(a, b);
    }
  if (!check_new_axioms(out, /*fail_fast=*/true).verdict)
    throw theorem_violation("hoop_to_pea: image fails the pseudo equality axioms");
  return out;
}

}  // namespace pealab
