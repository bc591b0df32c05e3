#include <array>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "pealab/pealab.hpp"

using namespace pealab;
using testing::ciungu5_text;
using testing::two_chain_bck;
using testing::two_chain_hoop;
using testing::two_directed;
using testing::two_equality;

TEST_CASE("the built-in five-element model matches its document") {
  BckAlgebra fixture = testing::bck_doc(ciungu5_text());
  CHECK(same_tables(fixture, ciungu5()));
  CHECK(fixture.names == ciungu5().names);
}

TEST_CASE("five-element model: axioms hold, condition (xii) fails") {
  BckAlgebra c5 = ciungu5();
  CHECK(check_pbck(c5).verdict);
  CHECK(check_pbck_props(c5).verdict);
  CHECK_FALSE(check_meet_absorption(c5).verdict);

  AxiomReport xii = check_condition_xii(c5);
  REQUIRE_FALSE(xii.verdict);
  // The classical witness chain: c->b = b, (c/\a)->(b/\a) = 0, b is not
  // below 0.  In the (a,b,c) layout of the inequality that is the tuple
  // (b,c,a), indices (2,3,1).
  CHECK(c5.imp(3, 2) == 2);
  CHECK(c5.meet(3, 1) == 1);
  CHECK(c5.meet(2, 1) == 0);
  CHECK(c5.imp(1, 0) == 0);
  CHECK_FALSE(leq(c5, 2, 0));
  bool found = false;
  for (const AxiomFailure& f : xii.failures)
    if (f.axiom_id == "xii-imp" && f.witnesses == std::vector<int>{2, 3, 1}) found = true;
  CHECK(found);

  SECTION("mutating a->b from b to 1 breaks the axioms") {
    BckAlgebra broken = c5;
    broken.imp(1, 2) = 4;
    CHECK_FALSE(check_pbck(broken).verdict);
  }
}

TEST_CASE("two-element chain is a pseudo BCK-meet-semilattice") {
  BckAlgebra chain = two_chain_bck();
  CHECK(check_pbck(chain).verdict);
  CHECK(check_condition_xii(chain).verdict);
  CHECK(check_pbck_props(chain).verdict);
  CHECK(check_meet_absorption(chain).verdict);
}

TEST_CASE("functor F") {
  CHECK(same_tables(functor_F(two_equality()), two_chain_bck()));
  CHECK(same_tables(functor_F(two_directed()), two_chain_bck()));

  for (int n = 1; n <= 3; ++n)
    for (const FiniteAlgebra& alg : enumerate_pea(n)->exemplars) {
      BckAlgebra image = functor_F(alg);
      CHECK(check_pbck(image, true).verdict);
      CHECK(check_condition_xii(image, true).verdict);
      CHECK(check_meet_absorption(image, true).verdict);
      CHECK(check_pbck_props(image, true).verdict);
    }

  SECTION("invalid inputs are contract errors") {
    FiniteAlgebra bad = two_equality();
    bad.sim(0, 1) = 1;
    CHECK_THROWS_AS(functor_F(bad), contract_error);
  }
}

TEST_CASE("functor G") {
  // G of the classical chain directs the equality operations.
  FiniteAlgebra image = functor_G(two_chain_bck());
  CHECK(same_tables(image, two_directed()));
  CHECK(check_new_axioms(image).verdict);

  SECTION("rejection carries the first (xii) witness") {
    try {
      functor_G(ciungu5());
      FAIL("expected xii_rejection");
    } catch (const xii_rejection& e) {
      CHECK(e.witness == std::array<int, 3>{1, 2, 2});
      CHECK(e.inequality == "simp");
    }
  }

  SECTION("invalid axioms are contract errors") {
    BckAlgebra bad = two_chain_bck();
    bad.imp(1, 0) = 1;
    CHECK_THROWS_AS(functor_G(bad), contract_error);
  }
}

TEST_CASE("round trips and invariance") {
  CHECK(roundtrip_FGF(two_equality()));
  CHECK(roundtrip_FGF(two_directed()));
  CHECK(roundtrip_FG(two_chain_bck()));
  CHECK_THROWS_AS(roundtrip_FG(ciungu5()), xii_rejection);

  // G after F directs the biconditional, so the equality algebra is not
  // fixed; its G-image is.
  CHECK_FALSE(is_invariant(two_equality()));
  CHECK(is_invariant(two_directed()));
  CHECK(is_invariant(hoop_to_pea(two_chain_hoop())));

  SECTION("F is injective on invariant algebras") {
    std::set<std::vector<int>> images;
    long invariants = 0;
    for (int n = 1; n <= 3; ++n)
      for (const FiniteAlgebra& alg : enumerate_pea(n)->exemplars) {
        if (!is_invariant(alg)) continue;
        ++invariants;
        images.insert(serialize_key(functor_F(alg)));
      }
    CHECK(static_cast<long>(images.size()) == invariants);
  }
}
