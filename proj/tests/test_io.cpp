#include <string>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"
#include "pealab/pealab.hpp"

using namespace pealab;
using testing::ciungu5_text;

static std::string error_of(const char* text) {
  try {
    parse_model(text);
  } catch (const input_error& e) {
    return e.what();
  }
  return "";
}

TEST_CASE("parsing the five-element document") {
  ModelDocument doc = parse_model(ciungu5_text());
  CHECK(doc.kind == ModelKind::pbck);
  CHECK(doc.names == std::vector<std::string>{"0", "a", "b", "c", "1"});
  CHECK(doc.top == 4);
  // imp row for c reads: 0 a b 1 1
  const Table& imp = doc.tables[1];
  CHECK(imp(3, 0) == 0);
  CHECK(imp(3, 1) == 1);
  CHECK(imp(3, 2) == 2);
  CHECK(imp(3, 3) == 4);
  CHECK(imp(3, 4) == 4);
}

TEST_CASE("degenerate one-element document") {
  const char* text =
      "kind pea\n"
      "elements 1\n"
      "top 1\n"
      "table meet\n"
      "1\n"
      "table sim\n"
      "1\n"
      "table bsim\n"
      "1\n";
  ModelDocument doc = parse_model(text);
  CHECK(doc.size() == 1);
  CHECK(check_new_axioms(to_algebra(doc)).verdict);
  CHECK(emit_model(doc) == text);
}

TEST_CASE("emit then parse is the identity") {
  for (const char* text : {ciungu5_text()}) {
    ModelDocument doc = parse_model(text);
    CHECK(parse_model(emit_model(doc)) == doc);
    // Emission is a fixpoint.
    CHECK(emit_model(parse_model(emit_model(doc))) == emit_model(doc));
  }
  for (int n = 1; n <= 3; ++n) {
    for (const FiniteAlgebra& alg : enumerate_pea(n)->exemplars) {
      ModelDocument doc = to_document(alg);
      CHECK(parse_model(emit_model(doc)) == doc);
      CHECK(same_tables(to_algebra(parse_model(emit_model(doc))), alg));
    }
    for (const PseudoHoop& hoop : enumerate_hoops(n)->exemplars) {
      ModelDocument doc = to_document(hoop);
      CHECK(parse_model(emit_model(doc)) == doc);
    }
  }
}

TEST_CASE("comments and blank lines are ignored") {
  ModelDocument doc = parse_model(
      "# leading comment\n"
      "kind pea   # trailing comment\n"
      "\n"
      "elements 0 1\n"
      "top 1\n"
      "table meet\n"
      "0 0\n"
      "0 1\n"
      "# interleaved\n"
      "table sim\n"
      "1 0\n"
      "0 1\n"
      "table bsim\n"
      "1 0\n"
      "0 1\n");
  CHECK(doc.size() == 2);
  CHECK(same_tables(to_algebra(doc), testing::two_equality()));
}

TEST_CASE("parse errors carry positions") {
  CHECK(error_of("") .find("unexpected end") != std::string::npos);
  CHECK(error_of("kinds pea\n").find("line 1, column 1") != std::string::npos);
  CHECK(error_of("kind weird\n").find("unknown kind 'weird'") != std::string::npos);
  CHECK(error_of("kind pea\nelements 0 0\n").find("duplicate element") != std::string::npos);
  CHECK(error_of("kind pea\nelements 0 1\ntop 2\n").find("unknown element '2'") !=
        std::string::npos);
  CHECK(error_of("kind hoop\nelements 0 1\ntop 1\n").find("expected 'unit'") !=
        std::string::npos);

  SECTION("wrong row arity names line and expected width") {
    std::string message = error_of(
        "kind pea\n"
        "elements 0 1\n"
        "top 1\n"
        "table meet\n"
        "0\n"
        "0 1\n"
        "table sim\n"
        "1 0\n"
        "0 1\n"
        "table bsim\n"
        "1 0\n"
        "0 1\n");
    CHECK(message.find("line 5") != std::string::npos);
    CHECK(message.find("expected 2") != std::string::npos);
  }

  SECTION("unknown element inside a table is located") {
    std::string message = error_of(
        "kind pea\n"
        "elements 0 1\n"
        "top 1\n"
        "table meet\n"
        "0 x\n"
        "0 1\n"
        "table sim\n"
        "1 0\n"
        "0 1\n"
        "table bsim\n"
        "1 0\n"
        "0 1\n");
    CHECK(message.find("line 5, column 3") != std::string::npos);
    CHECK(message.find("unknown element 'x'") != std::string::npos);
  }

  SECTION("duplicate and missing tables") {
    CHECK(error_of(
              "kind pea\n"
              "elements 0 1\n"
              "top 1\n"
              "table meet\n"
              "0 0\n"
              "0 1\n"
              "table meet\n"
              "0 0\n"
              "0 1\n")
              .find("duplicate table 'meet'") != std::string::npos);
    CHECK(error_of(
              "kind pea\n"
              "elements 0 1\n"
              "top 1\n"
              "table meet\n"
              "0 0\n"
              "0 1\n")
              .find("missing table 'sim'") != std::string::npos);
    CHECK(error_of(
              "kind pea\n"
              "elements 0 1\n"
              "top 1\n"
              "table prod\n"
              "0 0\n"
              "0 1\n")
              .find("no table named 'prod'") != std::string::npos);
  }
}

TEST_CASE("document kind conversions enforce the declared kind") {
  ModelDocument doc = parse_model(ciungu5_text());
  CHECK_THROWS_AS(to_algebra(doc), input_error);
  CHECK_THROWS_AS(to_hoop(doc), input_error);
  CHECK_NOTHROW(to_bck(doc));
}
