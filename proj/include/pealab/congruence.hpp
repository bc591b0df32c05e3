#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "pealab/algebra.hpp"
#include "pealab/core.hpp"
#include "pealab/deduction.hpp"
#include "pealab/derived.hpp"

namespace pealab {

// Partition of the carrier in restricted-growth form: class_of[0] = 0 and
// class_of[i] <= 1 + max(class_of[0..i-1]).  That normal form is also the
// canonical enumeration order for partitions.
struct EquivRelation {
  std::vector<int> class_of;

  int size() const { return static_cast<int>(class_of.size()); }
  bool same(int x, int y) const { return class_of[x] == class_of[y]; }
  int classes() const {
    int k = 0;
    for (int c : class_of) k = std::max(k, c + 1);
    return k;
  }

  static EquivRelation identity(int n) {
    EquivRelation r;
    r.class_of.resize(n);
    for (int i = 0; i < n; ++i) r.class_of[i] = i;
    return r;
  }
  static EquivRelation whole(int n) {
    EquivRelation r;
    r.class_of.assign(n, 0);
    return r;
  }

  // Relabels classes by first occurrence, restoring restricted-growth form.
  void canonicalize() {
    std::vector<int> relabel(class_of.size(), -1);
    int next = 0;
    for (int& c : class_of) {
      if (relabel[c] < 0) relabel[c] = next++;
      c = relabel[c];
    }
  }

  friend bool operator==(const EquivRelation&, const EquivRelation&) = default;
};

// Compatibility of the partition with ~, ~~ and /\.  One-sided
// substitution per argument suffices: transitivity of the partition
// stitches (a*x, b*x) and (b*x, b*y) into (a*x, b*y).
inline bool is_congruence(const FiniteAlgebra& alg, const EquivRelation& rel) {
  if (rel.size() != alg.size) throw input_error("is_congruence: partition size mismatch");
  const Table* ops[3] = {&alg.sim, &alg.bsim, &alg.meet};
  for (int a = 0; a < alg.size; ++a)
    for (int b = 0; b < alg.size; ++b) {
      if (!rel.same(a, b)) continue;
      for (const Table* op : ops)
        for (int c = 0; c < alg.size; ++c) {
          if (!rel.same((*op)(a, c), (*op)(b, c))) return false;
          if (!rel.same((*op)(c, a), (*op)(c, b))) return false;
        }
    }
  return true;
}

constexpr int kDefaultPartitionBound = 10;

// All congruences in restricted-growth-string order.
inline std::vector<EquivRelation> enumerate_congruences(const FiniteAlgebra& alg,
                                                        int max_size = kDefaultPartitionBound) {
  validate(alg);
  if (alg.size > max_size)
    throw capacity_error("enumerate_congruences: carrier size " + std::to_string(alg.size) +
                         " exceeds partition bound " + std::to_string(max_size));
  std::vector<EquivRelation> out;
  const int n = alg.size;
  EquivRelation rel;
  rel.class_of.assign(n, 0);

  // Iterative restricted-growth-string successor scan.
  while (true) {
    if (is_congruence(alg, rel)) out.push_back(rel);
    int i = n - 1;
    for (; i > 0; --i) {
      int cap = 0;
      for (int j = 0; j < i; ++j) cap = std::max(cap, rel.class_of[j]);
      if (rel.class_of[i] <= cap) break;
    }
    if (i == 0) break;
    ++rel.class_of[i];
    for (int j = i + 1; j < n; ++j) rel.class_of[j] = 0;
  }
  return out;
}

// The class of 1 under a congruence; provably a closed normal deductive
// system, which is asserted on every call.
inline DeductiveSystem f_from_theta(const FiniteAlgebra& alg, const EquivRelation& rel) {
  if (!is_congruence(alg, rel))
    throw contract_error("f_from_theta: relation is not a congruence");
  std::uint32_t mask = 0;
  for (int x = 0; x < alg.size; ++x)
    if (rel.same(x, alg.top)) mask |= std::uint32_t{1} << x;
  DeductiveSystem ds;
  ds.members = mask;
  ds.is_ds = is_sim_ds(alg, mask);
  if (!*ds.is_ds) throw theorem_violation("f_from_theta: class of 1 is not a deductive system");
  ds.closed = is_closed(alg, mask);
  ds.normal = is_normal(alg, mask);
  if (!*ds.closed || !*ds.normal)
    throw theorem_violation("f_from_theta: class of 1 is not closed and normal");
  ds.commutative = is_commutative_ds(alg, mask);
  return ds;
}

// The relation induced by a deductive system S: x related to y iff all
// four of x~y, y~x, x~~y, y~~x lie in S.  Provably an equivalence
// relation for any S; when S is normal it is provably a congruence and
// coincides with both two-condition variants, all of which is asserted.
inline EquivRelation theta_from_f(const FiniteAlgebra& alg, std::uint32_t mask) {
  detail::require_ds(alg, mask, "theta_from_f");
  const int n = alg.size;
  auto in = [&](int v) { return mask_contains(mask, v); };
  auto related = [&](int x, int y) {
    return in(alg.sim(x, y)) && in(alg.sim(y, x)) && in(alg.bsim(x, y)) && in(alg.bsim(y, x));
  };

  // Transitivity is a theorem, not an assumption; verify before
  // flattening the relation into a partition.
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (related(x, y) && related(y, z) && !related(x, z))
          throw theorem_violation("theta_from_f: induced relation is not transitive");

  EquivRelation rel;
  rel.class_of.assign(n, -1);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    if (rel.class_of[x] >= 0) continue;
    rel.class_of[x] = next;
    for (int y = x + 1; y < n; ++y)
      if (related(x, y)) rel.class_of[y] = next;
    ++next;
  }

  if (is_normal(alg, mask)) {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const bool sim_pair = in(alg.sim(x, y)) && in(alg.sim(y, x));
        const bool bsim_pair = in(alg.bsim(x, y)) && in(alg.bsim(y, x));
        if (sim_pair != rel.same(x, y) || bsim_pair != rel.same(x, y))
          throw theorem_violation("theta_from_f: simplified descriptions disagree for normal S");
      }
    if (!is_congruence(alg, rel))
      throw theorem_violation("theta_from_f: relation of a normal S is not a congruence");
  }
  return rel;
}

// One-to-one correspondence between congruences and normal closed
// deductive systems: equal counts and mutually inverse maps.
inline bool bijection_check(const FiniteAlgebra& alg, int max_size = kDefaultPartitionBound) {
  std::vector<EquivRelation> cons = enumerate_congruences(alg, max_size);
  std::vector<DeductiveSystem> ncds = enumerate_ds(alg, DsFilter::normal_closed);
  if (cons.size() != ncds.size()) return false;
  for (const EquivRelation& theta : cons) {
    DeductiveSystem f = f_from_theta(alg, theta);
    if (!(theta_from_f(alg, f.members) == theta)) return false;
  }
  for (const DeductiveSystem& f : ncds) {
    EquivRelation theta = theta_from_f(alg, f.members);
    if (f_from_theta(alg, theta).members != f.members) return false;
  }
  return true;
}

// Quotient by a normal deductive system.  Classes are ordered by their
// smallest representative; tables are computed representative-wise with
// an eager well-definedness sweep over all representative pairs.  The
// result provably satisfies the pseudo equality axioms; asserted.
inline FiniteAlgebra quotient(const FiniteAlgebra& alg, std::uint32_t mask) {
  detail::require_ds(alg, mask, "quotient");
  if (!is_normal(alg, mask)) throw contract_error("quotient: deductive system is not normal");
  EquivRelation rel = theta_from_f(alg, mask);

  const int n = alg.size;
  // class_of is in restricted-growth form, so class ids already follow
  // smallest representatives.
  const int k = rel.classes();
  std::vector<int> rep(k, -1);
  for (int x = 0; x < n; ++x)
    if (rep[rel.class_of[x]] < 0) rep[rel.class_of[x]] = x;

  FiniteAlgebra q;
  q.size = k;
  q.top = rel.class_of[alg.top];
  q.names.reserve(k);
  for (int c = 0; c < k; ++c)
    q.names.push_back(alg.names.empty() ? std::to_string(rep[c]) : alg.names[rep[c]]);
  q.meet = Table(k);
  q.sim = Table(k);
  q.bsim = Table(k);

  const Table* src[3] = {&alg.meet, &alg.sim, &alg.bsim};
  Table* dst[3] = {&q.meet, &q.sim, &q.bsim};
  for (int t = 0; t < 3; ++t)
    for (int c1 = 0; c1 < k; ++c1)
      for (int c2 = 0; c2 < k; ++c2) {
        const int value = rel.class_of[(*src[t])(rep[c1], rep[c2])];
        // Well-definedness across all representative choices.
        for (int x = 0; x < n; ++x) {
          if (rel.class_of[x] != c1) continue;
          for (int y = 0; y < n; ++y) {
            if (rel.class_of[y] != c2) continue;
            if (rel.class_of[(*src[t])(x, y)] != value)
              throw theorem_violation("quotient: operation not well defined on classes");
          }
        }
        (*dst[t])(c1, c2) = value;
      }

  if (!check_new_axioms(q, /*fail_fast=*/true).verdict)
    throw theorem_violation("quotient: result fails the pseudo equality axioms");
  return q;
}

// Quotient by a normal commutative deductive system is provably an
// equality algebra.
inline bool quotient_equality_check(const FiniteAlgebra& alg, std::uint32_t mask) {
  detail::require_ds(alg, mask, "quotient_equality_check");
  if (!is_normal(alg, mask))
    throw contract_error("quotient_equality_check: deductive system is not normal");
  if (!is_commutative_ds(alg, mask))
    throw contract_error("quotient_equality_check: deductive system is not commutative");
  return is_equality_algebra(quotient(alg, mask));
}

// Term identities behind subtractivity (S), congruence permutability (M)
// and congruence distributivity (P):
//   S(x,y) = x~y with S(x,x) = 1 and S(x,1) = x,
//   M(x,y,z) = ((y~x)~~z) /\ ((y~z)~~x) with M(x,y,y) = M(y,y,x) = x,
//   P(x,y,z) = ((x->y)~>y) /\ ((y->z)~>z) /\ ((z->x)~>x) with
//   P(x,x,y) = P(x,y,x) = P(y,x,x) = x.
// Both M identities reduce to w <= (v~w)~~v, an instance of the law
// behind item (ii) of the implication catalogue; writing the first
// factor as (x~y)~~z instead breaks M(x,y,y) = x on models where ~ is
// not commutative.
inline AxiomReport check_variety_terms(const FiniteAlgebra& alg, bool fail_fast = false) {
  const int n = alg.size;
  const int top = alg.top;
  const Table& s = alg.sim;
  const Table& t = alg.bsim;
  const Table& m = alg.meet;
  DerivedTables d = derive(alg);
  AxiomReport report;

  for (int x = 0; x < n; ++x) {
    if (s(x, x) != top) {
      report.add("S(x,x)=1", {x});
      if (fail_fast) return report;
    }
    if (s(x, top) != x) {
      report.add("S(x,1)=x", {x});
      if (fail_fast) return report;
    }
  }

  auto malcev = [&](int x, int y, int z) { return m(t(s(y, x), z), t(s(y, z), x)); };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (malcev(x, y, y) != x) {
        report.add("M(x,y,y)=x", {x, y});
        if (fail_fast) return report;
      }
      if (malcev(y, y, x) != x) {
        report.add("M(y,y,x)=x", {x, y});
        if (fail_fast) return report;
      }
    }

  auto pixley = [&](int x, int y, int z) {
    return m(m(d.simp(d.imp(x, y), y), d.simp(d.imp(y, z), z)), d.simp(d.imp(z, x), x));
  };
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      if (pixley(x, x, y) != x) {
        report.add("P(x,x,y)=x", {x, y});
        if (fail_fast) return report;
      }
      if (pixley(x, y, x) != x) {
        report.add("P(x,y,x)=x", {x, y});
        if (fail_fast) return report;
      }
      if (pixley(y, x, x) != x) {
        report.add("P(y,x,x)=x", {x, y});
        if (fail_fast) return report;
      }
    }
  return report;
}

}  // namespace pealab
