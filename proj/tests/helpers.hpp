#pragma once

#include "pealab/pealab.hpp"

namespace testing {

inline pealab::FiniteAlgebra pea_doc(const char* text) {
  return pealab::to_algebra(pealab::parse_model(text));
}

inline pealab::BckAlgebra bck_doc(const char* text) {
  return pealab::to_bck(pealab::parse_model(text));
}

inline pealab::PseudoHoop hoop_doc(const char* text) {
  return pealab::to_hoop(pealab::parse_model(text));
}

// Two-element equality algebra: sim = bsim = biconditional.
inline pealab::FiniteAlgebra two_equality() {
  return pea_doc(
      "kind pea\n"
      "elements 0 1\n"
      "top 1\n"
      "table meet\n"
      "0 0\n"
      "0 1\n"
      "table sim\n"
      "1 0\n"
      "0 1\n"
      "table bsim\n"
      "1 0\n"
      "0 1\n");
}

// Two-element proper pseudo equality algebra: sim is the converse of the
// classical implication, bsim the implication itself.  This is the image
// of the two-element equality algebra under G after F.
inline pealab::FiniteAlgebra two_directed() {
  return pea_doc(
      "kind pea\n"
      "elements 0 1\n"
      "top 1\n"
      "table meet\n"
      "0 0\n"
      "0 1\n"
      "table sim\n"
      "1 0\n"
      "1 1\n"
      "table bsim\n"
      "1 1\n"
      "0 1\n");
}

// Two-element chain as a pseudo BCK-meet-semilattice.
inline pealab::BckAlgebra two_chain_bck() {
  return bck_doc(
      "kind pbck\n"
      "elements 0 1\n"
      "top 1\n"
      "table meet\n"
      "0 0\n"
      "0 1\n"
      "table imp\n"
      "1 1\n"
      "0 1\n"
      "table simp\n"
      "1 1\n"
      "0 1\n");
}

// Two-element hoop: product = min, classical residua.
inline pealab::PseudoHoop two_chain_hoop() {
  return hoop_doc(
      "kind hoop\n"
      "elements 0 1\n"
      "unit 1\n"
      "table prod\n"
      "0 0\n"
      "0 1\n"
      "table imp\n"
      "1 1\n"
      "0 1\n"
      "table simp\n"
      "1 1\n"
      "0 1\n");
}

// Three-element chain 0 < h < 1 with truncated addition: prod is the
// Lukasiewicz t-norm, imp = simp its residuum.
inline pealab::PseudoHoop luk3_hoop() {
  return hoop_doc(
      "kind hoop\n"
      "elements 0 h 1\n"
      "unit 1\n"
      "table prod\n"
      "0 0 0\n"
      "0 0 h\n"
      "0 h 1\n"
      "table imp\n"
      "1 1 1\n"
      "h 1 1\n"
      "0 h 1\n"
      "table simp\n"
      "1 1 1\n"
      "h 1 1\n"
      "0 h 1\n");
}

inline const char* ciungu5_text() {
  return
      "# five-element pseudo BCK-meet-semilattice without condition (xii)\n"
      "kind pbck\n"
      "elements 0 a b c 1\n"
      "top 1\n"
      "table meet\n"
      "0 0 0 0 0\n"
      "0 a 0 a a\n"
      "0 0 b b b\n"
      "0 a b c c\n"
      "0 a b c 1\n"
      "table imp\n"
      "1 1 1 1 1\n"
      "0 1 b 1 1\n"
      "a a 1 1 1\n"
      "0 a b 1 1\n"
      "0 a b c 1\n"
      "table simp\n"
      "1 1 1 1 1\n"
      "b 1 b 1 1\n"
      "0 a 1 1 1\n"
      "0 a b 1 1\n"
      "0 a b c 1\n";
}

}  // namespace testing
