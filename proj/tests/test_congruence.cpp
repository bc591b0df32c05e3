#include <random>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "pealab/pealab.hpp"

using namespace pealab;
using testing::luk3_hoop;
using testing::two_directed;
using testing::two_equality;

TEST_CASE("trivial partitions are congruences") {
  for (const FiniteAlgebra& alg :
       {two_equality(), two_directed(), hoop_to_pea(luk3_hoop())}) {
    CHECK(is_congruence(alg, EquivRelation::identity(alg.size)));
    CHECK(is_congruence(alg, EquivRelation::whole(alg.size)));
  }
}

TEST_CASE("a partition that merges inconsistently is not a congruence") {
  FiniteAlgebra chain3 = hoop_to_pea(luk3_hoop());
  EquivRelation merge_bottom;
  merge_bottom.class_of = {0, 0, 1};  // {0,h} vs {1}
  // sim(0,h) and sim(h,h) land in different classes, so compatibility
  // with sim fails.
  CHECK_FALSE(is_congruence(chain3, merge_bottom));
  EquivRelation bad_size;
  bad_size.class_of = {0, 1};
  CHECK_THROWS_AS(is_congruence(chain3, bad_size), input_error);
}

TEST_CASE("congruence enumeration on small models") {
  FiniteAlgebra e = two_equality();
  std::vector<EquivRelation> cons = enumerate_congruences(e);
  REQUIRE(cons.size() == 2);
  CHECK(cons[0] == EquivRelation::whole(2));
  CHECK(cons[1] == EquivRelation::identity(2));

  FiniteAlgebra one{1, {"1"}, 0, Table(1, 0), Table(1, 0), Table(1, 0)};
  CHECK(enumerate_congruences(one).size() == 1);

  SECTION("counts match the normal closed deductive systems") {
    for (int n = 1; n <= 3; ++n)
      for (const FiniteAlgebra& alg : enumerate_pea(n)->exemplars)
        CHECK(enumerate_congruences(alg).size() ==
              enumerate_ds(alg, DsFilter::normal_closed).size());
  }

  SECTION("partition bound is a capacity error") {
    CHECK_THROWS_AS(enumerate_congruences(two_equality(), 1), capacity_error);
  }
}

TEST_CASE("class of top and induced relations") {
  FiniteAlgebra e = two_equality();
  CHECK(f_from_theta(e, EquivRelation::identity(2)).members == 0b10u);
  CHECK(f_from_theta(e, EquivRelation::whole(2)).members == 0b11u);
  EquivRelation not_con;
  not_con.class_of = {0, 0, 1};
  CHECK_THROWS_AS(f_from_theta(hoop_to_pea(luk3_hoop()), not_con), contract_error);

  CHECK(theta_from_f(e, 0b10) == EquivRelation::identity(2));
  CHECK(theta_from_f(e, 0b11) == EquivRelation::whole(2));
  CHECK_THROWS_AS(theta_from_f(e, 0b01), contract_error);

  SECTION("the class of top is closed and normal on every small model") {
    for (int n = 1; n <= 3; ++n)
      for (const FiniteAlgebra& alg : enumerate_pea(n)->exemplars)
        for (const EquivRelation& theta : enumerate_congruences(alg)) {
          DeductiveSystem ds = f_from_theta(alg, theta);
          CHECK(*ds.is_ds);
          CHECK(*ds.closed);
          CHECK(*ds.normal);
        }
  }

  SECTION("the four-condition relation is an equivalence for any DS") {
    for (int n = 1; n <= 3; ++n)
      for (const FiniteAlgebra& alg : enumerate_pea(n)->exemplars)
        for (const DeductiveSystem& ds : enumerate_ds(alg))
          CHECK_NOTHROW(theta_from_f(alg, ds.members));
  }
}

TEST_CASE("bijection between congruences and normal closed systems") {
  CHECK(bijection_check(two_equality()));
  CHECK(bijection_check(two_directed()));
  FiniteAlgebra one{1, {"1"}, 0, Table(1, 0), Table(1, 0), Table(1, 0)};
  CHECK(bijection_check(one));
  for (int n = 1; n <= 3; ++n)
    for (const FiniteAlgebra& alg : enumerate_pea(n)->exemplars)
      CHECK(bijection_check(alg));
}

TEST_CASE("quotients") {
  for (const FiniteAlgebra& alg :
       {two_equality(), two_directed(), hoop_to_pea(luk3_hoop())}) {
    // Quotient by {top} is the algebra itself (identity congruence).
    const std::uint32_t top_only = std::uint32_t{1} << alg.top;
    CHECK(same_tables(quotient(alg, top_only), alg));
    // Quotient by the whole carrier is degenerate.
    const std::uint32_t whole = (std::uint32_t{1} << alg.size) - 1u;
    CHECK(quotient(alg, whole).size == 1);
  }

  SECTION("every quotient by a normal DS is a valid model") {
    for (int n = 1; n <= 3; ++n)
      for (const FiniteAlgebra& alg : enumerate_pea(n)->exemplars)
        for (const DeductiveSystem& ds : enumerate_ds(alg, DsFilter::normal)) {
          FiniteAlgebra q = quotient(alg, ds.members);
          CHECK(check_new_axioms(q, true).verdict);
        }
  }

  SECTION("non-normal systems are rejected") {
    FiniteAlgebra alg = testing::pea_doc(
        "kind pea\n"
        "elements 0 1 2 3\n"
        "top 0\n"
        "table meet\n"
        "0 1 2 3\n"
        "1 1 1 1\n"
        "2 1 2 2\n"
        "3 1 2 3\n"
        "table sim\n"
        "0 0 0 0\n"
        "1 0 2 2\n"
        "2 0 0 2\n"
        "3 0 0 0\n"
        "table bsim\n"
        "0 1 2 3\n"
        "0 0 0 0\n"
        "0 3 0 0\n"
        "0 1 2 0\n");
    REQUIRE(is_sim_ds(alg, 0b1001));
    REQUIRE_FALSE(is_normal(alg, 0b1001));
    CHECK_THROWS_AS(quotient(alg, 0b1001), contract_error);
  }

  SECTION("quotients by normal commutative systems are equality algebras") {
    FiniteAlgebra v = two_directed();
    const std::uint32_t whole = 0b11;
    CHECK(quotient_equality_check(v, whole));
    CHECK(quotient_equality_check(two_equality(), 0b10));
    // {top} on the directed model is not commutative.
    CHECK_THROWS_AS(quotient_equality_check(v, 0b10), contract_error);

    for (int n = 1; n <= 3; ++n)
      for (const FiniteAlgebra& alg : enumerate_pea(n)->exemplars)
        for (const DeductiveSystem& ds : enumerate_ds(alg, DsFilter::normal)) {
          if (!*ds.commutative) continue;
          CHECK(quotient_equality_check(alg, ds.members));
        }
  }
}

TEST_CASE("subtractive, permutability and distributivity terms") {
  CHECK(check_variety_terms(two_equality()).verdict);
  // Regression: the directed model is where a transposed Mal'cev term
  // shows its difference.
  CHECK(check_variety_terms(two_directed()).verdict);
  for (int n = 1; n <= 3; ++n)
    for (const FiniteAlgebra& alg : enumerate_pea(n)->exemplars)
      CHECK(check_variety_terms(alg, true).verdict);

  SECTION("random tables usually fail") {
    std::mt19937 rng(77);
    std::uniform_int_distribution<int> pick(0, 2);
    FiniteAlgebra alg;
    alg.size = 3;
    alg.top = 2;
    alg.meet = Table(3);
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) alg.meet(a, b) = std::min(a, b);
    int failing = 0;
    for (int trial = 0; trial < 30; ++trial) {
      alg.sim = Table(3);
      alg.bsim = Table(3);
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          alg.sim(a, b) = pick(rng);
          alg.bsim(a, b) = pick(rng);
        }
      AxiomReport report = check_variety_terms(alg);
      CHECK(report.verdict == report.failures.empty());
      if (!report.verdict) ++failing;
    }
    CHECK(failing >= 25);
  }
}
