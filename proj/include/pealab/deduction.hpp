#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pealab/algebra.hpp"
#include "pealab/core.hpp"
#include "pealab/derived.hpp"

namespace pealab {

// Subset of the carrier as a bit set (bit i = element i), with cached
// classification flags once computed.
struct DeductiveSystem {
  std::uint32_t members = 0;
  std::optional<bool> is_ds;
  std::optional<bool> closed;
  std::optional<bool> normal;
  std::optional<bool> commutative;

  bool contains(int x) const { return (members >> x) & 1u; }
};

enum class DsFilter { all, closed, normal, normal_closed, commutative };

inline bool mask_contains(std::uint32_t mask, int x) { return (mask >> x) & 1u; }

// Upset of the meet order: a in S and a <= b imply b in S.  The meet
// table is the single source of truth for the order here.
inline bool is_upset(const FiniteAlgebra& alg, std::uint32_t mask) {
  for (int a = 0; a < alg.size; ++a) {
    if (!mask_contains(mask, a)) continue;
    for (int b = 0; b < alg.size; ++b)
      if (alg.meet(a, b) == a && !mask_contains(mask, b)) return false;
  }
  return true;
}

// Deductive system in the (~,~~) sense: an upset containing 1 such that
// a in S and b~a in S imply b in S.
inline bool is_sim_ds(const FiniteAlgebra& alg, std::uint32_t mask) {
  if (!mask_contains(mask, alg.top)) return false;
  if (!is_upset(alg, mask)) return false;
  for (int a = 0; a < alg.size; ++a) {
    if (!mask_contains(mask, a)) continue;
    for (int b = 0; b < alg.size; ++b)
      if (mask_contains(mask, alg.sim(b, a)) && !mask_contains(mask, b)) return false;
  }
  return true;
}

// Variant characterization: upset containing 1 closed under the rule
// "a in S and a~~b in S imply b in S".  Provably equivalent to
// is_sim_ds; kept separate so the equivalence stays testable.
inline bool is_bsim_ds(const FiniteAlgebra& alg, std::uint32_t mask) {
  if (!mask_contains(mask, alg.top)) return false;
  if (!is_upset(alg, mask)) return false;
  for (int a = 0; a < alg.size; ++a) {
    if (!mask_contains(mask, a)) continue;
    for (int b = 0; b < alg.size; ++b)
      if (mask_contains(mask, alg.bsim(a, b)) && !mask_contains(mask, b)) return false;
  }
  return true;
}

// Deductive system in the (->,~>) sense: contains 1 and is closed under
// modus ponens for ->.  Closure under ~> is provably equivalent and is
// asserted on every call.
inline bool is_imp_ds(const FiniteAlgebra& alg, const DerivedTables& d, std::uint32_t mask) {
  if (!mask_contains(mask, alg.top)) return false;
  auto mp_closed = [&](const Table& t) {
    for (int a = 0; a < alg.size; ++a) {
      if (!mask_contains(mask, a)) continue;
      for (int b = 0; b < alg.size; ++b)
        if (mask_contains(mask, t(a, b)) && !mask_contains(mask, b)) return false;
    }
    return true;
  };
  const bool via_imp = mp_closed(d.imp);
  const bool via_simp = mp_closed(d.simp);
  if (via_imp != via_simp)
    throw theorem_violation("is_imp_ds: modus ponens closure differs between -> and ~>");
  return via_imp;
}

namespace detail {

inline void require_ds(const FiniteAlgebra& alg, std::uint32_t mask, const char* who) {
  if (!is_sim_ds(alg, mask))
    throw contract_error(std::string(who) + ": subset is not a deductive system");
}

}  // namespace detail

// Closed: x~y and x~~y stay inside S for all x, y in S.  The one-sided
// criterion (1~x in S and x~~1 in S for all x in S) is provably
// equivalent and asserted on every call.
inline bool is_closed(const FiniteAlgebra& alg, std::uint32_t mask) {
  detail::require_ds(alg, mask, "is_closed");
  bool pairwise = true;
  for (int x = 0; x < alg.size && pairwise; ++x) {
    if (!mask_contains(mask, x)) continue;
    for (int y = 0; y < alg.size; ++y) {
      if (!mask_contains(mask, y)) continue;
      if (!mask_contains(mask, alg.sim(x, y)) || !mask_contains(mask, alg.bsim(x, y))) {
        pairwise = false;
        break;
      }
    }
  }
  bool one_sided = true;
  for (int x = 0; x < alg.size; ++x) {
    if (!mask_contains(mask, x)) continue;
    if (!mask_contains(mask, alg.sim(alg.top, x)) ||
        !mask_contains(mask, alg.bsim(x, alg.top))) {
      one_sided = false;
      break;
    }
  }
  if (pairwise != one_sided)
    throw theorem_violation("is_closed: pairwise and one-sided criteria disagree");
  return pairwise;
}

// Normal: x~y, y~x in S iff y~~x, x~~y in S, for all pairs.
inline bool is_normal(const FiniteAlgebra& alg, std::uint32_t mask) {
  detail::require_ds(alg, mask, "is_normal");
  for (int x = 0; x < alg.size; ++x)
    for (int y = 0; y < alg.size; ++y) {
      const bool sim_pair =
          mask_contains(mask, alg.sim(x, y)) && mask_contains(mask, alg.sim(y, x));
      const bool bsim_pair =
          mask_contains(mask, alg.bsim(y, x)) && mask_contains(mask, alg.bsim(x, y));
      if (sim_pair != bsim_pair) return false;
    }
  return true;
}

// Commutative: (a~b)~(b~a) in S for all pairs.
inline bool is_commutative_ds(const FiniteAlgebra& alg, std::uint32_t mask) {
  detail::require_ds(alg, mask, "is_commutative_ds");
  for (int a = 0; a < alg.size; ++a)
    for (int b = 0; b < alg.size; ++b)
      if (!mask_contains(mask, alg.sim(alg.sim(a, b), alg.sim(b, a)))) return false;
  return true;
}

// Every deductive system is provably closed under ->, ~> and /\ on pairs
// of its members; this turns that statement into a checkable report.
inline AxiomReport check_ds_closure_props(const FiniteAlgebra& alg, const DerivedTables& d,
                                          std::uint32_t mask) {
  detail::require_ds(alg, mask, "check_ds_closure_props");
  AxiomReport report;
  for (int a = 0; a < alg.size; ++a) {
    if (!mask_contains(mask, a)) continue;
    for (int b = 0; b < alg.size; ++b) {
      if (!mask_contains(mask, b)) continue;
      if (!mask_contains(mask, d.imp(a, b))) report.add("imp", {a, b});
      if (!mask_contains(mask, d.simp(a, b))) report.add("simp", {a, b});
      if (!mask_contains(mask, alg.meet(a, b))) report.add("meet", {a, b});
    }
  }
  return report;
}

constexpr int kDefaultSubsetBound = 20;

// All deductive systems matching the filter, in ascending bit-set order,
// with every flag populated.  Predicates run cheapest first so that the
// 2^n scan prunes early.
inline std::vector<DeductiveSystem> enumerate_ds(const FiniteAlgebra& alg,
                                                 DsFilter filter = DsFilter::all,
                                                 int max_size = kDefaultSubsetBound) {
  validate(alg);
  if (alg.size > max_size || alg.size > 31)
    throw capacity_error("enumerate_ds: carrier size " + std::to_string(alg.size) +
                         " exceeds subset-scan bound " + std::to_string(max_size));
  std::vector<DeductiveSystem> out;
  const std::uint32_t limit = (std::uint32_t{1} << alg.size) - 1u;
  for (std::uint32_t mask = 0; mask <= limit; ++mask) {
    if (!mask_contains(mask, alg.top)) continue;
    if (!is_sim_ds(alg, mask)) continue;
    DeductiveSystem ds;
    ds.members = mask;
    ds.is_ds = true;
    ds.closed = is_closed(alg, mask);
    ds.normal = is_normal(alg, mask);
    ds.commutative = is_commutative_ds(alg, mask);
    const bool keep = [&] {
      switch (filter) {
        case DsFilter::all: return true;
        case DsFilter::closed: return *ds.closed;
        case DsFilter::normal: return *ds.normal;
        case DsFilter::normal_closed: return *ds.normal && *ds.closed;
        case DsFilter::commutative: return *ds.commutative;
      }
      return false;
    }();
    if (keep) out.push_back(ds);
  }
  return out;
}

}  // namespace pealab
