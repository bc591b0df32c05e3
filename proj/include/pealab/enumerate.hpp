#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "pealab/algebra.hpp"
#include "pealab/bck.hpp"
#include "pealab/congruence.hpp"
#include "pealab/core.hpp"
#include "pealab/deduction.hpp"
#include "pealab/derived.hpp"
#include "pealab/hoop.hpp"

namespace pealab {

// Default cap for exhaustive model enumeration.  Size 5 works for the
// meet-table-first strategy but takes real time; beyond that the search
// space is out of desk reach.
constexpr int kDefaultEnumBound = 4;

// Record of all models of one signature and size.  Exemplars are stored
// in canonical form, pairwise non-isomorphic, sorted by canonical key.
// With up_to_iso = false they are the raw labeled models instead (the
// enumeration labels carriers with the top/unit at index n-1).
// predicate_hits records, per probed predicate, one description line for
// every exemplar satisfying it.
template <class Model>
struct Census {
  std::string signature;
  int size = 0;
  bool up_to_iso = true;
  std::vector<Model> exemplars;
  std::map<std::string, std::vector<std::string>> predicate_hits;

  long long count() const { return static_cast<long long>(exemplars.size()); }
};

namespace detail {

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

inline Table permute_table(const Table& t, const std::vector<int>& p) {
  Table out(t.size());
  for (int a = 0; a < t.size(); ++a)
    for (int b = 0; b < t.size(); ++b) out(p[a], p[b]) = p[t(a, b)];
  return out;
}

inline void append_table(std::vector<int>& key, const Table& t) {
  key.insert(key.end(), t.cells().begin(), t.cells().end());
}

inline Table table_from_slice(const std::vector<int>& key, int n, int offset) {
  Table t(n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t(a, b) = key[offset + a * n + b];
  return t;
}

}  // namespace detail

// Serialization key: distinguished element first, then the signature's
// tables row-major.  Two models are equal iff their keys are equal.
inline std::vector<int> serialize_key(const FiniteAlgebra& alg) {
  std::vector<int> key{alg.top};
  detail::append_table(key, alg.meet);
  detail::append_table(key, alg.sim);
  detail::append_table(key, alg.bsim);
  return key;
}

inline std::vector<int> serialize_key(const BckAlgebra& alg) {
  std::vector<int> key{alg.top};
  detail::append_table(key, alg.meet);
  detail::append_table(key, alg.imp);
  detail::append_table(key, alg.simp);
  return key;
}

inline std::vector<int> serialize_key(const PseudoHoop& hoop) {
  std::vector<int> key{hoop.unit};
  detail::append_table(key, hoop.prod);
  detail::append_table(key, hoop.imp);
  detail::append_table(key, hoop.simp);
  return key;
}

inline FiniteAlgebra pea_from_key(const std::vector<int>& key, int n) {
  return FiniteAlgebra{n, default_names(n), key[0], detail::table_from_slice(key, n, 1),
                       detail::table_from_slice(key, n, 1 + n * n),
                       detail::table_from_slice(key, n, 1 + 2 * n * n)};
}

inline BckAlgebra bck_from_key(const std::vector<int>& key, int n) {
  return BckAlgebra{n, default_names(n), key[0], detail::table_from_slice(key, n, 1),
                    detail::table_from_slice(key, n, 1 + n * n),
                    detail::table_from_slice(key, n, 1 + 2 * n * n)};
}

inline PseudoHoop hoop_from_key(const std::vector<int>& key, int n) {
  return PseudoHoop{n, default_names(n), key[0], detail::table_from_slice(key, n, 1),
                    detail::table_from_slice(key, n, 1 + n * n),
                    detail::table_from_slice(key, n, 1 + 2 * n * n)};
}

namespace detail {

template <class Model>
Model model_from_key(const std::vector<int>& key, int n);

template <>
inline FiniteAlgebra model_from_key<FiniteAlgebra>(const std::vector<int>& key, int n) {
  return pea_from_key(key, n);
}
template <>
inline BckAlgebra model_from_key<BckAlgebra>(const std::vector<int>& key, int n) {
  return bck_from_key(key, n);
}
template <>
inline PseudoHoop model_from_key<PseudoHoop>(const std::vector<int>& key, int n) {
  return hoop_from_key(key, n);
}

template <class Model>
int model_size(const Model& m) {
  return m.size;
}

}  // namespace detail

// Minimum serialization over all relabelings of the carrier.  The
// distinguished element is relabeled like any other; its position is part
// of the key, so isomorphisms are exactly key equalities.
template <class Model>
std::vector<int> canonical_key(const Model& model) {
  const int n = detail::model_size(model);
  const std::vector<int> base = serialize_key(model);
  std::vector<Table> tables;
  for (size_t off = 1; off < base.size(); off += static_cast<size_t>(n) * n)
    tables.push_back(detail::table_from_slice(base, n, static_cast<int>(off)));

  std::vector<int> best;
  for (const auto& p : detail::all_permutations(n)) {
    std::vector<int> key;
    key.reserve(base.size());
    key.push_back(p[base[0]]);
    for (const Table& t : tables) detail::append_table(key, detail::permute_table(t, p));
    if (best.empty() || key < best) best = key;
  }
  return best;
}

template <class Model>
Model canonicalize(const Model& model) {
  return detail::model_from_key<Model>(canonical_key(model), detail::model_size(model));
}

// ---------------------------------------------------------------------
// Backtracking enumerators.  Strategy: fix the meet table first (all
// labeled semilattices with top at index n-1), then backtrack over the
// remaining operation tables with the forced rows/columns pre-filled and
// the remaining axioms evaluated as pruning constraints after every cell
// assignment.  Instances that still read unset cells are skipped; every
// completed candidate is re-verified with the full checker.
// ---------------------------------------------------------------------

namespace detail {

constexpr int kUnset = -1;

// All meet-semilattice tables on {0..n-1} with greatest element n-1.
inline std::vector<Table> semilattices_with_top(int n) {
  std::vector<Table> out;
  const int top = n - 1;
  std::vector<std::pair<int, int>> free_cells;
  for (int i = 0; i < n - 1; ++i)
    for (int j = i + 1; j < n - 1; ++j) free_cells.emplace_back(i, j);

  Table m(n);
  for (int i = 0; i < n; ++i) {
    m(i, i) = i;
    m(i, top) = i;
    m(top, i) = i;
  }
  std::vector<int> choice(free_cells.size(), 0);
  while (true) {
    for (size_t k = 0; k < free_cells.size(); ++k) {
      m(free_cells[k].first, free_cells[k].second) = choice[k];
      m(free_cells[k].second, free_cells[k].first) = choice[k];
    }
    FiniteAlgebra shim{n, {}, top, m, Table(n, top), Table(n, top)};
    if (check_semilattice(shim, /*fail_fast=*/true).verdict) out.push_back(m);
    // odometer
    size_t k = 0;
    for (; k < choice.size(); ++k) {
      if (++choice[k] < n) break;
      choice[k] = 0;
    }
    if (k == choice.size()) break;
  }
  return out;
}

// Pseudo equality axioms F4'-F7 on partial sim/bsim tables.  A cell
// value < 0 means unset; instances reading an unset cell are skipped.
inline bool pea_partial_ok(const Table& m, const Table& s, const Table& t, int n) {
  auto le = [&](int x, int y) { return m(x, y) == x; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        const int ab = m(a, b);
        const int abc = m(ab, c);
        const int bc = m(b, c);
        const int ac = m(a, c);
        {
          const int u = s(abc, c);
          if (u >= 0) {
            const int v1 = s(bc, c);
            if (v1 >= 0 && !le(u, v1)) return false;
            const int v2 = s(abc, bc);
            if (v2 >= 0 && !le(u, v2)) return false;
          }
          const int w = t(c, abc);
          if (w >= 0) {
            const int v3 = t(c, bc);
            if (v3 >= 0 && !le(w, v3)) return false;
            const int v4 = t(bc, abc);
            if (v4 >= 0 && !le(w, v4)) return false;
          }
        }
        {
          const int u = s(a, b);
          if (u >= 0) {
            const int v = s(ac, bc);
            if (v >= 0 && !le(u, v)) return false;
          }
          const int w = t(a, b);
          if (w >= 0) {
            const int v = t(ac, bc);
            if (v >= 0 && !le(w, v)) return false;
          }
        }
        {
          // F6: a~b <= (c~a)~~(c~b);  a~~b <= (a~~c)~(b~~c)
          const int u = s(a, b);
          if (u >= 0) {
            const int ca = s(c, a), cb = s(c, b);
            if (ca >= 0 && cb >= 0) {
              const int v = t(ca, cb);
              if (v >= 0 && !le(u, v)) return false;
            }
          }
          const int w = t(a, b);
          if (w >= 0) {
            const int ac2 = t(a, c), bc2 = t(b, c);
            if (ac2 >= 0 && bc2 >= 0) {
              const int v = s(ac2, bc2);
              if (v >= 0 && !le(w, v)) return false;
            }
          }
        }
        {
          // F7: a~b <= (a~c)~(b~c);  a~~b <= (c~~a)~~(c~~b)
          const int u = s(a, b);
          if (u >= 0) {
            const int ac2 = s(a, c), bc2 = s(b, c);
            if (ac2 >= 0 && bc2 >= 0) {
              const int v = s(ac2, bc2);
              if (v >= 0 && !le(u, v)) return false;
            }
          }
          const int w = t(a, b);
          if (w >= 0) {
            const int ca = t(c, a), cb = t(c, b);
            if (ca >= 0 && cb >= 0) {
              const int v = t(ca, cb);
              if (v >= 0 && !le(w, v)) return false;
            }
          }
        }
      }
  return true;
}

template <class Visit>
void enumerate_pea_labeled(int n, Visit&& visit) {
  const int top = n - 1;
  for (const Table& m : semilattices_with_top(n)) {
    Table s(n, kUnset), t(n, kUnset);
    for (int a = 0; a < n; ++a) {
      s(a, a) = top;
      t(a, a) = top;
      s(a, top) = a;  // F3: a ~ 1 = a
      t(top, a) = a;  // F3: 1 ~~ a = a
    }
    s(top, top) = top;
    t(top, top) = top;

    std::vector<std::array<int, 3>> cells;  // (table 0=sim 1=bsim, a, b)
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (s(a, b) == kUnset) cells.push_back({0, a, b});
        if (t(a, b) == kUnset) cells.push_back({1, a, b});
      }

    auto rec = [&](auto&& self, size_t idx) -> void {
      if (idx == cells.size()) {
        FiniteAlgebra alg{n, default_names(n), top, m, s, t};
        if (check_new_axioms(alg, /*fail_fast=*/true).verdict) visit(alg);
        return;
      }
      auto [which, a, b] = cells[idx];
      Table& target = which == 0 ? s : t;
      for (int v = 0; v < n; ++v) {
        target(a, b) = v;
        if (pea_partial_ok(m, s, t, n)) self(self, idx + 1);
      }
      target(a, b) = kUnset;
    };
    rec(rec, 0);
  }
}

// Original axiom system: commutative sim/bsim, pruning with F5'-F7'.
inline bool jk_partial_ok(const Table& m, const Table& s, const Table& t, int n) {
  auto le = [&](int x, int y) { return m(x, y) == x; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        if (le(a, b) && le(b, c)) {
          const int sac = s(a, c), sbc = s(b, c), sab = s(a, b);
          if (sac >= 0 && sbc >= 0 && !le(sac, sbc)) return false;
          if (sac >= 0 && sab >= 0 && !le(sac, sab)) return false;
          const int tca = t(c, a), tcb = t(c, b), tba = t(b, a);
          if (tca >= 0 && tcb >= 0 && !le(tca, tcb)) return false;
          if (tca >= 0 && tba >= 0 && !le(tca, tba)) return false;
        }
        const int ac = m(a, c), bc = m(b, c);
        const int u = s(a, b);
        if (u >= 0) {
          const int v = s(ac, bc);
          if (v >= 0 && !le(u, v)) return false;
          const int sac2 = s(a, c), sbc2 = s(b, c);
          if (sac2 >= 0 && sbc2 >= 0) {
            const int v2 = t(sac2, sbc2);
            if (v2 >= 0 && !le(u, v2)) return false;
          }
        }
        const int w = t(a, b);
        if (w >= 0) {
          const int v = t(ac, bc);
          if (v >= 0 && !le(w, v)) return false;
          const int tac = t(a, c), tbc = t(b, c);
          if (tac >= 0 && tbc >= 0) {
            const int v2 = s(tac, tbc);
            if (v2 >= 0 && !le(w, v2)) return false;
          }
        }
      }
  return true;
}

template <class Visit>
void enumerate_jk_labeled(int n, Visit&& visit) {
  const int top = n - 1;
  for (const Table& m : semilattices_with_top(n)) {
    Table s(n, kUnset), t(n, kUnset);
    for (int a = 0; a < n; ++a) {
      s(a, a) = top;
      t(a, a) = top;
      s(a, top) = a;  // F4': a ~ 1 = a
      s(top, a) = a;  // F2' symmetry
      t(a, top) = a;
      t(top, a) = a;
    }
    s(top, top) = top;
    t(top, top) = top;

    std::vector<std::array<int, 3>> cells;
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b) {
        if (s(a, b) == kUnset) cells.push_back({0, a, b});
        if (t(a, b) == kUnset) cells.push_back({1, a, b});
      }

    auto rec = [&](auto&& self, size_t idx) -> void {
      if (idx == cells.size()) {
        FiniteAlgebra alg{n, default_names(n), top, m, s, t};
        if (check_jk_axioms(alg, /*fail_fast=*/true).verdict) visit(alg);
        return;
      }
      auto [which, a, b] = cells[idx];
      Table& target = which == 0 ? s : t;
      for (int v = 0; v < n; ++v) {
        target(a, b) = v;
        target(b, a) = v;
        if (jk_partial_ok(m, s, t, n)) self(self, idx + 1);
      }
      target(a, b) = kUnset;
      target(b, a) = kUnset;
    };
    rec(rec, 0);
  }
}

// Pseudo BCK constraints on partial imp/simp tables.  The implication
// order is pre-filled (a->b = 1 iff a <= b), so PBCK4/SL2 hold by
// construction; PBCK1, SL1 and optionally condition (xii) prune.
inline bool pbck_partial_ok(const Table& m, const Table& f, const Table& g, int n, int top,
                            bool require_xii) {
  auto le = [&](int x, int y) { return m(x, y) == x; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) {
        {
          const int fab = f(a, b), fbc = f(b, c), fac = f(a, c);
          if (fab >= 0 && fbc >= 0 && fac >= 0) {
            const int inner = g(fbc, fac);
            if (inner >= 0) {
              const int outer = g(fab, inner);
              if (outer >= 0 && outer != top) return false;
            }
          }
          const int gab = g(a, b), gbc = g(b, c), gac = g(a, c);
          if (gab >= 0 && gbc >= 0 && gac >= 0) {
            const int inner = f(gbc, gac);
            if (inner >= 0) {
              const int outer = f(gab, inner);
              if (outer >= 0 && outer != top) return false;
            }
          }
        }
        if (require_xii) {
          const int u = f(b, a);
          if (u >= 0) {
            const int v = f(m(b, c), m(a, c));
            if (v >= 0 && !le(u, v)) return false;
          }
          const int w = g(b, a);
          if (w >= 0) {
            const int v = g(m(b, c), m(a, c));
            if (v >= 0 && !le(w, v)) return false;
          }
        }
      }
  // SL1: a /\ ((a->b)~>b) = a
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const int fab = f(a, b);
      if (fab < 0) continue;
      const int v = g(fab, b);
      if (v >= 0 && m(a, v) != a) return false;
    }
  return true;
}

template <class Visit>
void enumerate_pbck_labeled(int n, bool require_xii, Visit&& visit) {
  const int top = n - 1;
  for (const Table& m : semilattices_with_top(n)) {
    auto le = [&](int x, int y) { return m(x, y) == x; };
    Table f(n, kUnset), g(n, kUnset);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (le(a, b)) {
          f(a, b) = top;
          g(a, b) = top;
        }
      }
    for (int b = 0; b < n; ++b) {
      if (b != top) {
        f(top, b) = b;  // PBCK2
        g(top, b) = b;
      }
    }

    std::vector<std::array<int, 3>> cells;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        if (f(a, b) == kUnset) cells.push_back({0, a, b});
        if (g(a, b) == kUnset) cells.push_back({1, a, b});
      }

    auto rec = [&](auto&& self, size_t idx) -> void {
      if (idx == cells.size()) {
        BckAlgebra alg{n, default_names(n), top, m, f, g};
        if (!check_pbck(alg, /*fail_fast=*/true).verdict) return;
        if (require_xii && !check_condition_xii(alg, /*fail_fast=*/true).verdict) return;
        visit(alg);
        return;
      }
      auto [which, a, b] = cells[idx];
      Table& target = which == 0 ? f : g;
      for (int v = 0; v < n; ++v) {
        if (v == top) continue;  // a->b = 1 only when a <= b, already filled
        target(a, b) = v;
        if (pbck_partial_ok(m, f, g, n, top, require_xii)) self(self, idx + 1);
      }
      target(a, b) = kUnset;
    };
    rec(rec, 0);
  }
}

// Pseudo hoop equations (iii)-(v) on partial tables; (i)/(ii) prefilled.
inline bool hoop_partial_ok(const Table& p, const Table& f, const Table& g, int n) {
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      // (v): all four products agree when determined
      int value = kUnset;
      const int cand[4] = {
          f(a, b) >= 0 ? p(f(a, b), a) : kUnset,
          f(b, a) >= 0 ? p(f(b, a), b) : kUnset,
          g(a, b) >= 0 ? p(a, g(a, b)) : kUnset,
          g(b, a) >= 0 ? p(b, g(b, a)) : kUnset,
      };
      for (int v : cand) {
        if (v < 0) continue;
        if (value < 0)
          value = v;
        else if (value != v)
          return false;
      }
      for (int c = 0; c < n; ++c) {
        // (iii): (a.b)->c = a->(b->c)
        const int ab = p(a, b);
        if (ab >= 0) {
          const int lhs = f(ab, c);
          const int bc = f(b, c);
          if (lhs >= 0 && bc >= 0) {
            const int rhs = f(a, bc);
            if (rhs >= 0 && lhs != rhs) return false;
          }
          // (iv): (a.b)~>c = b~>(a~>c)
          const int lhs2 = g(ab, c);
          const int ac = g(a, c);
          if (lhs2 >= 0 && ac >= 0) {
            const int rhs2 = g(b, ac);
            if (rhs2 >= 0 && lhs2 != rhs2) return false;
          }
        }
      }
    }
  return true;
}

template <class Visit>
void enumerate_hoops_labeled(int n, Visit&& visit) {
  const int one = n - 1;
  Table p(n, kUnset), f(n, kUnset), g(n, kUnset);
  for (int a = 0; a < n; ++a) {
    p(a, one) = a;
    p(one, a) = a;
    f(a, a) = one;
    g(a, a) = one;
  }

  std::vector<std::array<int, 3>> cells;  // 0=prod, 1=imp, 2=simp
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (p(a, b) == kUnset) cells.push_back({0, a, b});
    }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (f(a, b) == kUnset) cells.push_back({1, a, b});
      if (g(a, b) == kUnset) cells.push_back({2, a, b});
    }

  auto rec = [&](auto&& self, size_t idx) -> void {
    if (idx == cells.size()) {
      PseudoHoop hoop{n, default_names(n), one, p, f, g};
      if (check_pseudo_hoop(hoop, /*fail_fast=*/true).verdict) visit(hoop);
      return;
    }
    auto [which, a, b] = cells[idx];
    Table& target = which == 0 ? p : (which == 1 ? f : g);
    for (int v = 0; v < n; ++v) {
      target(a, b) = v;
      if (hoop_partial_ok(p, f, g, n)) self(self, idx + 1);
    }
    target(a, b) = kUnset;
  };
  rec(rec, 0);
}

template <class Model, class EnumFn>
std::shared_ptr<const Census<Model>> build_census(const std::string& signature, int n,
                                                  bool up_to_iso, EnumFn&& enumerate) {
  auto census = std::make_shared<Census<Model>>();
  census->signature = signature;
  census->size = n;
  census->up_to_iso = up_to_iso;
  if (up_to_iso) {
    std::set<std::vector<int>> keys;
    enumerate([&](const Model& m) { keys.insert(canonical_key(m)); });
    for (const auto& key : keys) census->exemplars.push_back(model_from_key<Model>(key, n));
  } else {
    std::vector<std::vector<int>> keys;
    enumerate([&](const Model& m) { keys.push_back(serialize_key(m)); });
    std::sort(keys.begin(), keys.end());
    for (const auto& key : keys) census->exemplars.push_back(model_from_key<Model>(key, n));
  }
  return census;
}

// Per-model-type memo for completed censuses; enumeration is expensive
// and its result immutable, so every caller shares one copy.
template <class Model>
struct CensusCache {
  using Map =
      std::map<std::tuple<std::string, int, bool>, std::shared_ptr<const Census<Model>>>;
  static Map& map() {
    static Map instance;
    return instance;
  }
  static std::mutex& mutex() {
    static std::mutex instance;
    return instance;
  }
};

template <class Model>
std::shared_ptr<const Census<Model>> census_cache_lookup(const std::string& signature, int n,
                                                         bool up_to_iso) {
  std::lock_guard<std::mutex> lock(CensusCache<Model>::mutex());
  auto& cache = CensusCache<Model>::map();
  auto it = cache.find({signature, n, up_to_iso});
  return it == cache.end() ? nullptr : it->second;
}

template <class Model>
void census_cache_store(const std::string& signature, int n, bool up_to_iso,
                        std::shared_ptr<const Census<Model>> census) {
  std::lock_guard<std::mutex> lock(CensusCache<Model>::mutex());
  CensusCache<Model>::map()[{signature, n, up_to_iso}] = std::move(census);
}

inline void require_capacity(const char* what, int n, int bound) {
  if (n < 1) throw input_error(std::string(what) + ": size must be positive");
  if (n > bound)
    throw capacity_error(std::string(what) + ": size " + std::to_string(n) +
                         " exceeds enumeration bound " + std::to_string(bound));
}

}  // namespace detail

// All pseudo equality algebras of size n.  Enumeration is exhaustive and
// memoized per process; spent once, the census is reused by every caller.
inline std::shared_ptr<const Census<FiniteAlgebra>> enumerate_pea(int n, bool up_to_iso = true,
                                                                  int bound = kDefaultEnumBound) {
  detail::require_capacity("enumerate_pea", n, bound);
  if (auto hit = detail::census_cache_lookup<FiniteAlgebra>("pea", n, up_to_iso)) return hit;
  auto census = detail::build_census<FiniteAlgebra>(
      "pea", n, up_to_iso, [&](auto&& visit) { detail::enumerate_pea_labeled(n, visit); });
  detail::census_cache_store("pea", n, up_to_iso, census);
  return census;
}

// All models of the original (collapsing) axiom system of size n.
inline std::shared_ptr<const Census<FiniteAlgebra>> enumerate_jk(int n, bool up_to_iso = true,
                                                                 int bound = kDefaultEnumBound) {
  detail::require_capacity("enumerate_jk", n, bound);
  if (auto hit = detail::census_cache_lookup<FiniteAlgebra>("jk", n, up_to_iso)) return hit;
  auto census = detail::build_census<FiniteAlgebra>(
      "jk", n, up_to_iso, [&](auto&& visit) { detail::enumerate_jk_labeled(n, visit); });
  detail::census_cache_store("jk", n, up_to_iso, census);
  return census;
}

// All pseudo BCK-meet-semilattices of size n, optionally restricted to
// those satisfying condition (xii).
inline std::shared_ptr<const Census<BckAlgebra>> enumerate_pbck(int n, bool require_xii,
                                                                bool up_to_iso = true,
                                                                int bound = kDefaultEnumBound) {
  const std::string signature = require_xii ? "pbck_xii" : "pbck";
  detail::require_capacity("enumerate_pbck", n, bound);
  if (auto hit = detail::census_cache_lookup<BckAlgebra>(signature, n, up_to_iso)) return hit;
  auto census = detail::build_census<BckAlgebra>(signature, n, up_to_iso, [&](auto&& visit) {
    detail::enumerate_pbck_labeled(n, require_xii, visit);
  });
  detail::census_cache_store(signature, n, up_to_iso, census);
  return census;
}

// All pseudo hoops of size n.
inline std::shared_ptr<const Census<PseudoHoop>> enumerate_hoops(int n, bool up_to_iso = true,
                                                                 int bound = kDefaultEnumBound) {
  detail::require_capacity("enumerate_hoops", n, bound);
  if (auto hit = detail::census_cache_lookup<PseudoHoop>("hoop", n, up_to_iso)) return hit;
  auto census = detail::build_census<PseudoHoop>(
      "hoop", n, up_to_iso, [&](auto&& visit) { detail::enumerate_hoops_labeled(n, visit); });
  detail::census_cache_store("hoop", n, up_to_iso, census);
  return census;
}

// ---------------------------------------------------------------------
// Counterexample hunting over the enumerated model space.
// ---------------------------------------------------------------------

struct SearchWitness {
  std::string predicate;
  int size = 0;
  std::string description;
  std::optional<FiniteAlgebra> pea;
  std::optional<BckAlgebra> bck;
  std::optional<std::uint32_t> subset;
};

inline const std::vector<std::string>& predicate_catalogue() {
  static const std::vector<std::string> catalogue = {
      "sim_neq_bsim",      "jk_with_sim_neq_bsim", "non_invariant_pea",   "ds_not_closed",
      "ds_not_closed_invariant", "ds_not_normal",  "pbck_without_xii",
  };
  return catalogue;
}

// Predicates whose witness set is provably empty: finding a witness
// falsifies a theorem rather than completing a hunt.
inline bool predicate_expected_empty(const std::string& predicate) {
  return predicate == "jk_with_sim_neq_bsim" || predicate == "ds_not_closed_invariant";
}

// Evaluates one catalogued predicate on one pseudo equality algebra,
// returning the witness (with sub-witness and description) when it hits.
// Predicates over the original axiom system reuse the sim/bsim probe.
inline std::optional<SearchWitness> probe_pea_predicate(const FiniteAlgebra& alg,
                                                        const std::string& predicate) {
  SearchWitness w;
  w.predicate = predicate;
  w.size = alg.size;

  if (predicate == "sim_neq_bsim" || predicate == "jk_with_sim_neq_bsim") {
    for (int a = 0; a < alg.size; ++a)
      for (int b = 0; b < alg.size; ++b)
        if (alg.sim(a, b) != alg.bsim(a, b)) {
          w.pea = alg;
          w.description = "sim(" + std::to_string(a) + "," + std::to_string(b) + ") = " +
                          std::to_string(alg.sim(a, b)) + " but bsim(" + std::to_string(a) +
                          "," + std::to_string(b) + ") = " + std::to_string(alg.bsim(a, b));
          return w;
        }
    return std::nullopt;
  }

  if (predicate == "non_invariant_pea") {
    if (is_invariant(alg)) return std::nullopt;
    w.pea = alg;
    w.description = "G(F(A)) differs from A";
    return w;
  }

  if (predicate == "ds_not_closed" || predicate == "ds_not_normal" ||
      predicate == "ds_not_closed_invariant") {
    const bool want_closed = predicate != "ds_not_normal";
    if (predicate == "ds_not_closed_invariant" && !is_invariant(alg)) return std::nullopt;
    for (const DeductiveSystem& ds : enumerate_ds(alg)) {
      const bool bad = want_closed ? !*ds.closed : !*ds.normal;
      if (bad) {
        w.pea = alg;
        w.subset = ds.members;
        w.description = std::string("deductive system mask ") + std::to_string(ds.members) +
                        " is not " + (want_closed ? "closed" : "normal");
        return w;
      }
    }
    return std::nullopt;
  }

  throw input_error("probe_pea_predicate: unknown predicate '" + predicate + "'");
}

inline std::optional<SearchWitness> probe_bck_predicate(const BckAlgebra& alg,
                                                        const std::string& predicate) {
  if (predicate != "pbck_without_xii")
    throw input_error("probe_bck_predicate: unknown predicate '" + predicate + "'");
  AxiomReport xii = check_condition_xii(alg, /*fail_fast=*/true);
  if (xii.verdict) return std::nullopt;
  const AxiomFailure& f = xii.failures.front();
  SearchWitness w;
  w.predicate = predicate;
  w.size = alg.size;
  w.bck = alg;
  w.description = "condition (xii) fails on the " +
                  std::string(f.axiom_id == "xii-imp" ? "imp" : "simp") + " side at (" +
                  std::to_string(f.witnesses[0]) + "," + std::to_string(f.witnesses[1]) + "," +
                  std::to_string(f.witnesses[2]) + ")";
  return w;
}

// Predicates that apply to pea-signature censuses (everything except the
// BCK-side predicate, and the jk predicate which scans its own class).
inline bool predicate_on_pea_census(const std::string& predicate) {
  return predicate == "sim_neq_bsim" || predicate == "non_invariant_pea" ||
         predicate == "ds_not_closed" || predicate == "ds_not_closed_invariant" ||
         predicate == "ds_not_normal";
}

// Probes one predicate over a whole census and records the hits.
inline std::vector<std::string> scan_census(Census<FiniteAlgebra>& census,
                                            const std::string& predicate) {
  std::vector<std::string> hits;
  for (const FiniteAlgebra& alg : census.exemplars)
    if (auto w = probe_pea_predicate(alg, predicate)) hits.push_back(w->description);
  census.predicate_hits[predicate] = hits;
  return hits;
}

inline std::vector<std::string> scan_census(Census<BckAlgebra>& census,
                                            const std::string& predicate) {
  std::vector<std::string> hits;
  for (const BckAlgebra& alg : census.exemplars)
    if (auto w = probe_bck_predicate(alg, predicate)) hits.push_back(w->description);
  census.predicate_hits[predicate] = hits;
  return hits;
}

inline std::vector<std::string> scan_census(Census<PseudoHoop>&, const std::string& predicate) {
  throw input_error("no catalogued predicate applies to hoop censuses (got '" + predicate +
                    "')");
}

// First witness in canonical enumeration order (sizes ascending, models
// in canonical-key order, subsets in ascending mask order), or nullopt
// once the whole space up to n_max is exhausted.
inline std::optional<SearchWitness> find_counterexample(const std::string& predicate, int n_max,
                                                        int bound = kDefaultEnumBound) {
  detail::require_capacity("find_counterexample", n_max, bound);
  bool known = false;
  for (const std::string& name : predicate_catalogue()) known = known || name == predicate;
  if (!known) throw input_error("find_counterexample: unknown predicate '" + predicate + "'");

  if (predicate == "pbck_without_xii") {
    for (int n = 1; n <= n_max; ++n)
      for (const BckAlgebra& alg :
           enumerate_pbck(n, /*require_xii=*/false, true, bound)->exemplars)
        if (auto w = probe_bck_predicate(alg, predicate)) return w;
    return std::nullopt;
  }

  const bool jk = predicate == "jk_with_sim_neq_bsim";
  for (int n = 1; n <= n_max; ++n) {
    auto census = jk ? enumerate_jk(n, true, bound) : enumerate_pea(n, true, bound);
    for (const FiniteAlgebra& alg : census->exemplars)
      if (auto w = probe_pea_predicate(alg, predicate)) return w;
  }
  return std::nullopt;
}

}  // namespace pealab
